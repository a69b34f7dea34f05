//! Isometrically embedded subgraphs and non-QE witnesses.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::is_cnd_distance;
use crate::graph::{bits, distance_matrix, vertex_mask, DistanceMatrix, Graph};
use crate::ops::induced_by_mask;

/// Smallest order of a non-QE graph; every graph on four or fewer vertices
/// is of QE class.
pub const MIN_NON_QE_ORDER: usize = 5;

/// Whether the subgraph induced on `set` keeps the distances of `g`.
pub fn is_isometric_subgraph(g: &Graph, set: &[usize]) -> Result<bool> {
    let mask = vertex_mask(g, set)?;
    let d = distance_matrix(g)?;
    if !g.is_connected_within(mask) {
        return Err(Error::DisconnectedSubgraph);
    }
    Ok(is_isometric_mask(g, &d, mask))
}

/// `mask` must induce a connected subgraph; `d` is the distance matrix of `g`.
pub(crate) fn is_isometric_mask(g: &Graph, d: &DistanceMatrix, mask: u16) -> bool {
    // An induced subgraph of diameter at most two is isometric.
    let diameter_two = bits(mask).all(|x| {
        bits(mask & !(1 << x) & !g.neighbor_mask(x))
            .all(|y| g.neighbor_mask(x) & g.neighbor_mask(y) & mask != 0)
    });
    if diameter_two {
        return true;
    }
    let h = induced_by_mask(g, mask);
    let dh = distance_matrix(&h).expect("connected induced subgraph");
    let vs: Vec<usize> = bits(mask).collect();
    dh == d.restrict(&vs)
}

/// Least-size, then lexicographically least, vertex set inducing a proper
/// connected isometric subgraph that is not of QE class.
pub fn non_qe_witness(g: &Graph) -> Option<Vec<usize>> {
    let d = distance_matrix(g).ok()?;
    witness_with_distances(g, &d)
}

pub(crate) fn witness_with_distances(g: &Graph, d: &DistanceMatrix) -> Option<Vec<usize>> {
    let n = g.order();
    for size in MIN_NON_QE_ORDER..n {
        for set in (0..n).combinations(size) {
            let mask = set.iter().fold(0u16, |m, &v| m | 1 << v);
            if !g.is_connected_within(mask) || !is_isometric_mask(g, d, mask) {
                continue;
            }
            if !is_cnd_distance(&d.restrict(&set)) {
                return Some(set);
            }
        }
    }
    None
}

//! Exhaustive enumeration of connected graphs up to isomorphism.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_cert, CanonicalCert};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, ordered by certificate. Every one of the `2^(n(n-1)/2)`
/// labeled graphs is scanned.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_certs(n)?
        .into_iter()
        .map(|c| c.to_graph())
        .collect())
}

pub fn enumerate_certs(n: usize) -> Result<Vec<CanonicalCert>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let classes = (0..total)
        .into_par_iter()
        .fold(HashSet::new, |mut seen, mask| {
            let mut rows = [0u16; MAX_ENUMERATION_ORDER];
            let mut m = mask;
            while m != 0 {
                let (i, j) = pairs[m.trailing_zeros() as usize];
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
                m &= m - 1;
            }
            let g = Graph::from_rows(n, &rows[..n]);
            if g.is_connected() {
                seen.insert(canonical_cert(&g));
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut certs: Vec<CanonicalCert> = classes.into_iter().collect();
    certs.sort_unstable();
    Ok(certs)
}

//! Explicit quadratic embeddings.
//!
//! For a distance matrix `D` the centred Gram matrix `-½·C·D·C`, with
//! `C = I - J/n`, is positive semidefinite exactly when `D` is conditionally
//! negative semidefinite. Its eigen-decomposition `VΛVᵀ` then yields points
//! `V√Λ` whose squared Euclidean distances reproduce `D`.

use crate::error::{Error, Result};
use crate::exact::is_cnd_distance;
use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::linalg::symmetric_eigen;
use crate::ops::{find_pendant_edge, induced_subgraph, PendantEdge};

/// Gram eigenvalues at or below this fraction of the largest are dropped.
pub const RANK_CUTOFF: f64 = 1e-10;
/// Tolerance for [`verify_embedding`] used throughout the crate.
pub const EMBEDDING_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub dim: usize,
    /// One point of length `dim` per vertex.
    pub coords: Vec<Vec<f64>>,
}

impl Embedding {
    pub fn order(&self) -> usize {
        self.coords.len()
    }

    pub fn squared_distance(&self, x: usize, y: usize) -> f64 {
        self.coords[x]
            .iter()
            .zip(&self.coords[y])
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }
}

/// `-½·C·D·C` with `C = I - J/n`.
pub fn gram_from_distance(d: &DistanceMatrix) -> Vec<Vec<f64>> {
    let n = d.order();
    let m = d.to_f64();
    let nf = n as f64;
    let row_mean: Vec<f64> = m.iter().map(|r| r.iter().sum::<f64>() / nf).collect();
    let total_mean = row_mean.iter().sum::<f64>() / nf;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| -0.5 * (m[i][j] - row_mean[i] - row_mean[j] + total_mean))
                .collect()
        })
        .collect()
}

/// Points realizing the distances of a QE graph.
pub fn embed(g: &Graph) -> Result<Embedding> {
    let d = distance_matrix(g)?;
    if !is_cnd_distance(&d) {
        return Err(Error::NotQE);
    }
    Ok(embed_distance(&d))
}

/// Gram construction without the exact gate; callers must know `d` is
/// conditionally negative semidefinite.
pub fn embed_distance(d: &DistanceMatrix) -> Embedding {
    let n = d.order();
    let eig = symmetric_eigen(&gram_from_distance(d));
    let top = eig.values.first().copied().unwrap_or(0.0).max(0.0);
    let kept: Vec<usize> = (0..n)
        .filter(|&k| eig.values[k] > RANK_CUTOFF * top && top > 0.0)
        .collect();
    let coords = (0..n)
        .map(|v| {
            kept.iter()
                .map(|&k| eig.vectors[k][v] * eig.values[k].sqrt())
                .collect()
        })
        .collect();
    Embedding {
        dim: kept.len(),
        coords,
    }
}

/// Largest `|‖φ(x) - φ(y)‖² - d(x, y)|` over all pairs.
pub fn verify_embedding(e: &Embedding, d: &DistanceMatrix) -> Result<f64> {
    if e.order() != d.order() {
        return Err(Error::DimensionMismatch {
            expected: d.order(),
            found: e.order(),
        });
    }
    if let Some(bad) = e.coords.iter().find(|p| p.len() != e.dim) {
        return Err(Error::DimensionMismatch {
            expected: e.dim,
            found: bad.len(),
        });
    }
    let n = d.order();
    let mut worst = 0.0f64;
    for x in 0..n {
        for y in x + 1..n {
            worst = worst.max((e.squared_distance(x, y) - f64::from(d.get(x, y))).abs());
        }
    }
    Ok(worst)
}

/// Result of the pendant-edge rule: the graph is QE with QEC exactly zero,
/// witnessed by an embedding lifted from the remainder.
#[derive(Clone, Debug, PartialEq)]
pub struct PendantLift {
    pub witness: PendantEdge,
    pub value: f64,
    pub embedding: Embedding,
    pub defect: f64,
}

/// If `g` has a pendant edge `a' ~ b'` whose removal leaves a QE graph `H`,
/// embeds `H` and lifts it: every vertex of `H` keeps its point with a zero
/// appended, `a'` and `b'` take the points of `a` and `b` with a one
/// appended.
pub fn pendant_rule(g: &Graph) -> Option<PendantLift> {
    let witness = find_pendant_edge(g)?;
    let rest: Vec<usize> = (0..g.order())
        .filter(|&v| v != witness.a_prime && v != witness.b_prime)
        .collect();
    let h = induced_subgraph(g, &rest).ok()?;
    let base = embed(&h).ok()?;
    let position = |v: usize| rest.iter().position(|&r| r == v).expect("vertex of H");
    let dim = base.dim + 1;
    let coords: Vec<Vec<f64>> = (0..g.order())
        .map(|v| {
            let (src, lift) = if v == witness.a_prime {
                (witness.a, 1.0)
            } else if v == witness.b_prime {
                (witness.b, 1.0)
            } else {
                (v, 0.0)
            };
            let mut p = base.coords[position(src)].clone();
            p.push(lift);
            p
        })
        .collect();
    let embedding = Embedding { dim, coords };
    let defect = verify_embedding(&embedding, &distance_matrix(g).ok()?).ok()?;
    (defect <= EMBEDDING_TOL).then_some(PendantLift {
        witness,
        value: 0.0,
        embedding,
        defect,
    })
}

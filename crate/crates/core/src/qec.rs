//! Numeric quadratic embedding constant.
//!
//! `QEC(G) = max { ⟨f, Df⟩ : ⟨f, f⟩ = 1, ⟨1, f⟩ = 0 }` is the top eigenvalue
//! of `QᵀDQ`, where the columns of `Q` are an orthonormal basis of `1^⊥`.
//! The maximizer `f = Qy` is a stationary point of the Lagrangian
//! `⟨f, Df⟩ - λ(⟨f, f⟩ - 1) - μ⟨1, f⟩` with `λ = QEC(G)`; pairing
//! `Df - λf = (μ/2)·1` with `1` gives `μ = (2/n)⟨1, Df⟩`.

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::linalg::{
    dot, eigenvalues_desc, mat_vec, norm, normalize_sign, ones_complement_basis, symmetric_eigen,
};

#[derive(Clone, Debug, PartialEq)]
pub struct QecReport {
    pub value: f64,
    /// Unit maximizer orthogonal to the all-ones vector.
    pub maximizer: Vec<f64>,
    /// Lagrange multiplier of the `⟨1, f⟩ = 0` constraint.
    pub mu: f64,
    /// `‖Df - value·f - (mu/2)·1‖`.
    pub residual: f64,
    /// Largest distance eigenvalue.
    pub lambda1: f64,
    /// Second largest distance eigenvalue.
    pub lambda2: f64,
}

pub fn qec(g: &Graph) -> Result<QecReport> {
    if g.order() < 2 {
        return Err(Error::OrderOne);
    }
    let d = distance_matrix(g)?;
    Ok(qec_of_distance(&d))
}

/// Engine entry point for a precomputed distance matrix of order `>= 2`.
pub fn qec_of_distance(dist: &DistanceMatrix) -> QecReport {
    let n = dist.order();
    assert!(n >= 2, "QEC requires at least two vertices");
    let d = dist.to_f64();
    let q = ones_complement_basis(n);

    // A = QᵀDQ
    let dq: Vec<Vec<f64>> = d
        .iter()
        .map(|row| {
            (0..n - 1)
                .map(|j| (0..n).map(|k| row[k] * q[k][j]).sum())
                .collect()
        })
        .collect();
    let a: Vec<Vec<f64>> = (0..n - 1)
        .map(|i| {
            (0..n - 1)
                .map(|j| (0..n).map(|k| q[k][i] * dq[k][j]).sum())
                .collect()
        })
        .collect();
    let a = symmetrize(a);
    let eig = symmetric_eigen(&a);
    let y = &eig.vectors[0];

    let mut f: Vec<f64> = q.iter().map(|row| dot(row, y)).collect();
    let len = norm(&f);
    f.iter_mut().for_each(|x| *x /= len);
    normalize_sign(&mut f);

    let df = mat_vec(&d, &f);
    let value = eig.values[0];
    let mu = 2.0 * df.iter().sum::<f64>() / n as f64;
    let residual = df
        .iter()
        .zip(&f)
        .map(|(dfi, fi)| dfi - value * fi - mu / 2.0)
        .map(|r| r * r)
        .sum::<f64>()
        .sqrt();

    let spectrum = eigenvalues_desc(&d);
    QecReport {
        value,
        maximizer: f,
        mu,
        residual,
        lambda1: spectrum[0],
        lambda2: spectrum[1],
    }
}

fn symmetrize(mut a: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let k = a.len();
    for i in 0..k {
        for j in i + 1..k {
            let m = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = m;
            a[j][i] = m;
        }
    }
    a
}

/// Eigenvalues of the distance matrix, descending.
pub fn distance_spectrum(g: &Graph) -> Result<Vec<f64>> {
    Ok(eigenvalues_desc(&distance_matrix(g)?.to_f64()))
}

/// Least eigenvalue of the 0/1 adjacency matrix.
pub fn adjacency_min_eigenvalue(g: &Graph) -> f64 {
    *eigenvalues_desc(&g.adjacency_matrix())
        .last()
        .expect("order >= 1")
}

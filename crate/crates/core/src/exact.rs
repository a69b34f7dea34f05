//! Exact conditional negative-definiteness test.
//!
//! With `E` the `n × (n-1)` matrix whose columns are `e_i - e_{i+1}`, the
//! columns of `E` span the hyperplane orthogonal to the all-ones vector, so
//! `D` is conditionally negative semidefinite iff `M = -EᵀDE` is positive
//! semidefinite. `M` is integral; semidefiniteness is decided by symmetric
//! pivoted LDLᵀ over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::graph::{distance_matrix, DistanceMatrix, Graph};

/// `-EᵀDE` as an integer matrix of order `n - 1`.
pub fn projected_form(d: &DistanceMatrix) -> Vec<Vec<i64>> {
    let n = d.order();
    let at = |i: usize, j: usize| i64::from(d.get(i, j));
    (0..n - 1)
        .map(|i| {
            (0..n - 1)
                .map(|j| -(at(i, j) - at(i, j + 1) - at(i + 1, j) + at(i + 1, j + 1)))
                .collect()
        })
        .collect()
}

/// Whether the symmetric integer matrix `m` is positive semidefinite.
///
/// At each step the largest remaining diagonal entry is used as pivot. A
/// negative pivot means indefinite. A zero pivot means every remaining
/// diagonal entry is zero, in which case the remaining block must vanish.
pub fn is_psd(m: &[Vec<i64>]) -> bool {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut remaining: Vec<usize> = (0..k).collect();
    while !remaining.is_empty() {
        let (pos, &p) = remaining
            .iter()
            .enumerate()
            .max_by(|(_, &i), (_, &j)| a[i][i].cmp(&a[j][j]).then(j.cmp(&i)))
            .expect("non-empty");
        let pivot = a[p][p].clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            return remaining
                .iter()
                .all(|&i| remaining.iter().all(|&j| a[i][j].is_zero()));
        }
        remaining.remove(pos);
        let row_p: Vec<BigRational> = remaining.iter().map(|&j| a[p][j].clone()).collect();
        for (ii, &i) in remaining.iter().enumerate() {
            if row_p[ii].is_zero() {
                continue;
            }
            let factor = &row_p[ii] / &pivot;
            for (jj, &j) in remaining.iter().enumerate() {
                let delta = &factor * &row_p[jj];
                a[i][j] -= delta;
            }
        }
    }
    true
}

/// Whether `g` is of QE class, decided without rounding.
pub fn is_cnd_exact(g: &Graph) -> Result<bool> {
    let d = distance_matrix(g)?;
    Ok(is_cnd_distance(&d))
}

pub fn is_cnd_distance(d: &DistanceMatrix) -> bool {
    d.order() < 2 || is_psd(&projected_form(d))
}

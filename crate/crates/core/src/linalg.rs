//! Dense symmetric eigen-decomposition by the cyclic Jacobi method and the
//! Householder basis of the hyperplane orthogonal to the all-ones vector.

/// Stop when the off-diagonal Frobenius norm falls below this.
pub const JACOBI_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenpairs sorted by descending eigenvalue. `vectors[k]` is the unit
/// eigenvector for `values[k]`, sign-normalized so that its first entry of
/// magnitude above `1e-12` is positive.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += 2.0 * a[p][q] * a[p][q];
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi rotations on a copy of the symmetric matrix `m`.
pub fn symmetric_eigen(m: &[Vec<f64>]) -> SymEigen {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect())
        .collect();

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]).then(i.cmp(&j)));
    let values = idx.iter().map(|&i| a[i][i]).collect();
    let vectors = idx
        .iter()
        .map(|&i| {
            let mut col: Vec<f64> = v.iter().map(|row| row[i]).collect();
            normalize_sign(&mut col);
            col
        })
        .collect();
    SymEigen { values, vectors }
}

pub fn eigenvalues_desc(m: &[Vec<f64>]) -> Vec<f64> {
    symmetric_eigen(m).values
}

pub(crate) fn normalize_sign(x: &mut [f64]) {
    if let Some(&lead) = x.iter().find(|v| v.abs() > 1e-12) {
        if lead < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
}

/// Columns `1..n` of the Householder reflection sending `e_0` to `1/√n`:
/// an orthonormal basis of the hyperplane `⟨1, x⟩ = 0`, returned as `n`
/// rows of length `n - 1`.
pub fn ones_complement_basis(n: usize) -> Vec<Vec<f64>> {
    assert!(n >= 2);
    let u = 1.0 / (n as f64).sqrt();
    let mut w = vec![-u; n];
    w[0] += 1.0;
    let ww: f64 = w.iter().map(|x| x * x).sum();
    (0..n)
        .map(|i| {
            (1..n)
                .map(|j| f64::from(u8::from(i == j)) - 2.0 * w[i] * w[j] / ww)
                .collect()
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, x)).collect()
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

//! Closed-form quadratic embedding constants for special families.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::qec::adjacency_min_eigenvalue;

/// A closed-form value together with the expression it was evaluated from.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub value: f64,
    pub expression: String,
}

/// Distance of the bisection bracket from the poles of `Σ mᵢ/(α+mᵢ)`.
pub const POLE_GAP: f64 = 1e-9;
/// Bisection stops once the bracket is no wider than this.
pub const BISECTION_WIDTH: f64 = 1e-12;

/// Formula for complete graphs, paths, cycles, wedges and `K_n \ P_4`.
pub fn qec_formula(spec: &FamilySpec) -> Result<f64> {
    formula(spec).map(|c| c.value)
}

pub fn formula(spec: &FamilySpec) -> Result<ClosedForm> {
    spec.validate_params()?;
    let cf = |value: f64, expression: String| Ok(ClosedForm { value, expression });
    match *spec {
        FamilySpec::Complete(n) if n >= 2 => cf(-1.0, "-1".into()),
        FamilySpec::Path(n) if n >= 2 => {
            let v = -1.0 / (1.0 + (PI / n as f64).cos());
            cf(v, format!("-1/(1+cos(pi/{n}))"))
        }
        FamilySpec::Cycle(n) if n % 2 == 0 => cf(0.0, "0".into()),
        FamilySpec::Cycle(n) => {
            let c = (PI / n as f64).cos();
            cf(-1.0 / (4.0 * c * c), format!("-1/(4cos^2(pi/{n}))"))
        }
        FamilySpec::Wedge(n, m) => {
            let (nf, mf) = (n as f64, m as f64);
            let v = (-2.0 * nf + mf - 1.0 + (nf * (nf - mf) * (mf + 1.0)).sqrt()) / (nf + 1.0);
            let num = 2 * n - m + 1;
            let rad = n * (n - m) * (m + 1);
            cf(v, format!("(-{num}+sqrt({rad}))/{}", n + 1))
        }
        FamilySpec::KnMinusP4(n) if n <= 6 => {
            cf((-3.0 + 5f64.sqrt()) / 2.0, "(-3+sqrt(5))/2".into())
        }
        FamilySpec::KnMinusP4(n) => {
            let v = kn_minus_p4_general(n);
            let rad = 5 * n * n - 28 * n + 36;
            cf(v, format!("(-{}+sqrt({rad}))/{}", n + 6, 2 * n))
        }
        _ => Err(Error::UnsupportedFamily(spec.to_string())),
    }
}

/// The `n >= 7` branch, `(-(n+6) + √((n+6)² + 4n(n-10))) / 2n`.
pub fn kn_minus_p4_general(n: usize) -> f64 {
    let nf = n as f64;
    (-(nf + 6.0) + ((nf + 6.0).powi(2) + 4.0 * nf * (nf - 10.0)).sqrt()) / (2.0 * nf)
}

/// `Σ mᵢ / (α + mᵢ)`.
pub fn multipartite_secular(parts: &[usize], alpha: f64) -> f64 {
    parts.iter().map(|&m| m as f64 / (alpha + m as f64)).sum()
}

/// Complete multipartite graph with parts sorted descending.
///
/// If the two largest parts are equal the value is `m₁ - 2`. Otherwise
/// `F(α) = Σ mᵢ/(α+mᵢ)` is strictly decreasing on `(-m₁, -m₂)`, where it
/// runs from `+∞` to `-∞`; its root `α*` there is the least root of `F`
/// and the value is `-2 - α*`.
pub fn qec_multipartite(parts: &[usize]) -> Result<f64> {
    FamilySpec::CompleteMultipartite(parts.to_vec()).validate_params()?;
    let (m1, m2) = (parts[0] as f64, parts[1] as f64);
    if parts[0] == parts[1] {
        return Ok(m1 - 2.0);
    }
    let mut lo = -m1 + POLE_GAP;
    let mut hi = -m2 - POLE_GAP;
    let (f_lo, f_hi) = (
        multipartite_secular(parts, lo),
        multipartite_secular(parts, hi),
    );
    assert!(
        f_lo > 0.0 && f_hi < 0.0,
        "bracket [{lo}, {hi}] does not change sign for {parts:?}"
    );
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if multipartite_secular(parts, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(-2.0 - 0.5 * (lo + hi))
}

/// Join of an `r₁`-regular and an `r₂`-regular graph:
/// `-2 + max{-λmin(G₁), -λmin(G₂), (2n₁n₂ - r₁n₂ - r₂n₁)/(n₁+n₂)}`.
pub fn qec_join_regular(g1: &Graph, g2: &Graph) -> Result<f64> {
    let r1 = g1.regular_degree().ok_or(Error::NotRegular)? as f64;
    let r2 = g2.regular_degree().ok_or(Error::NotRegular)? as f64;
    let (n1, n2) = (g1.order() as f64, g2.order() as f64);
    let cross = (2.0 * n1 * n2 - r1 * n2 - r2 * n1) / (n1 + n2);
    let best = (-adjacency_min_eigenvalue(g1))
        .max(-adjacency_min_eigenvalue(g2))
        .max(cross);
    Ok(best - 2.0)
}

/// Closed form for any family: dispatches stars and multipartite graphs to
/// [`qec_multipartite`].
pub fn family_closed_form(spec: &FamilySpec) -> Result<ClosedForm> {
    match spec {
        FamilySpec::CompleteMultipartite(parts) => Ok(ClosedForm {
            value: qec_multipartite(parts)?,
            expression: multipartite_expression(parts),
        }),
        FamilySpec::Star(m) => Ok(ClosedForm {
            value: qec_multipartite(&[*m, 1])?,
            expression: multipartite_expression(&[*m, 1]),
        }),
        _ => formula(spec),
    }
}

fn multipartite_expression(parts: &[usize]) -> String {
    if parts[0] == parts[1] {
        format!("{}", parts[0] as i64 - 2)
    } else {
        let s: Vec<String> = parts.iter().map(|m| format!("{m}/(a+{m})")).collect();
        format!("-2-a, a least root of {} = 0", s.join(" + "))
    }
}

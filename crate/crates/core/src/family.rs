//! Named graph families with fixed vertex labelings.
//!
//! Labeling conventions (stable, so graph6 output is reproducible):
//!
//! * `Path(n)`: edges `{i-1, i}`.
//! * `Cycle(n)`: edges `{i, i+1 mod n}`.
//! * `CompleteMultipartite(parts)`: parts occupy consecutive label blocks in
//!   the given (descending) order.
//! * `Star(m)`: leaves `0..m`, centre `m` (same as multipartite `(m, 1)`).
//! * `Wedge(n, m)`: `K_n` on `0..n`, the star centre is vertex `n`, glued to
//!   `0..m`.
//! * `KnMinusP4(n)`: `K_n` with edges `{0,1}`, `{1,2}`, `{2,3}` removed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Part sizes, sorted descending, at least two parts.
    CompleteMultipartite(Vec<usize>),
    /// `K_{m,1}`.
    Star(usize),
    /// `K_n ∧ K_{m,1}`: a new vertex joined to `m` vertices of `K_n`.
    Wedge(usize, usize),
    /// `K_n` minus the edges of a path on four vertices.
    KnMinusP4(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Star(m) => m + 1,
            FamilySpec::Wedge(n, _) => n + 1,
            FamilySpec::KnMinusP4(n) => *n,
        }
    }

    /// Parameter bounds and the order cap.
    pub fn validate(&self) -> Result<()> {
        self.validate_params()?;
        let order = self.order();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(())
    }

    /// Parameter bounds only; closed forms are defined beyond the order cap.
    pub fn validate_params(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::BadParams(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n < 1 => {
                return bad("n must be >= 1")
            }
            FamilySpec::Cycle(n) if *n < 3 => return bad("n must be >= 3"),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.len() < 2 {
                    return bad("need at least two parts");
                }
                if parts.iter().any(|&m| m == 0) {
                    return bad("parts must be non-empty");
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return bad("parts must be sorted descending");
                }
            }
            FamilySpec::Star(m) if *m < 1 => return bad("m must be >= 1"),
            FamilySpec::Wedge(n, m) if *m < 1 || m > n => return bad("need 1 <= m <= n"),
            FamilySpec::KnMinusP4(n) if *n < 5 => return bad("n must be >= 5"),
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", s.join(","))
            }
            FamilySpec::Star(m) => write!(f, "star:{m}"),
            FamilySpec::Wedge(n, m) => write!(f, "wedge:{n},{m}"),
            FamilySpec::KnMinusP4(n) => write!(f, "knp4:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind:args`, e.g. `path:6`, `multipartite:3,2`, `wedge:5,2`,
    /// `knp4:6`. Multipartite parts are sorted descending.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("cannot parse family spec {s:?}"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let one = |nums: &[usize]| {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(bad())
            }
        };
        let spec = match kind.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => FamilySpec::Path(one(&nums)?),
            "cycle" | "c" => FamilySpec::Cycle(one(&nums)?),
            "complete" | "k" => FamilySpec::Complete(one(&nums)?),
            "star" => FamilySpec::Star(one(&nums)?),
            "knp4" => FamilySpec::KnMinusP4(one(&nums)?),
            "multipartite" => {
                let mut parts = nums;
                parts.sort_unstable_by(|a, b| b.cmp(a));
                FamilySpec::CompleteMultipartite(parts)
            }
            "wedge" => match nums[..] {
                [n, m] => FamilySpec::Wedge(n, m),
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Realizes a family member with the documented labeling.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    match spec {
        FamilySpec::Path(_) => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(_) => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete(_) => Graph::complete(n),
        FamilySpec::CompleteMultipartite(parts) => multipartite(parts),
        FamilySpec::Star(m) => multipartite(&[*m, 1]),
        FamilySpec::Wedge(k, m) => {
            let mut g = Graph::complete(n)?;
            for v in *m..*k {
                g.remove_edge(v, *k)?;
            }
            Ok(g)
        }
        FamilySpec::KnMinusP4(_) => {
            let mut g = Graph::complete(n)?;
            for (u, v) in [(0, 1), (1, 2), (2, 3)] {
                g.remove_edge(u, v)?;
            }
            Ok(g)
        }
    }
}

fn multipartite(parts: &[usize]) -> Result<Graph> {
    let n = parts.iter().sum();
    let mut g = Graph::complete(n)?;
    let mut start = 0;
    for &m in parts {
        for u in start..start + m {
            for v in u + 1..start + m {
                g.remove_edge(u, v)?;
            }
        }
        start += m;
    }
    Ok(g)
}

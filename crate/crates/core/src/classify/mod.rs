//! QE / non-QE classification with primary detection.

mod enumerate;
mod isometric;
mod sieve;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canon::{canonical_cert, CanonicalCert};
use crate::error::{Error, Result};
use crate::exact::is_cnd_distance;
use crate::graph::{distance_matrix, Graph};
use crate::qec::qec_of_distance;

pub use enumerate::{enumerate_certs, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use isometric::{is_isometric_subgraph, non_qe_witness, MIN_NON_QE_ORDER};
pub use sieve::{
    sieve_trace, sieve_trace_with, ProductKind, SieveContext, SieveEntry, SieveStep, SieveTrace,
    SIGN_TOL,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Qe,
    NonQePrimary,
    NonQeNonPrimary,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Qe => "QE",
            Verdict::NonQePrimary => "NonQePrimary",
            Verdict::NonQeNonPrimary => "NonQeNonPrimary",
        }
    }

    pub fn is_qe(self) -> bool {
        self == Verdict::Qe
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "QE" => Ok(Verdict::Qe),
            "NonQePrimary" => Ok(Verdict::NonQePrimary),
            "NonQeNonPrimary" => Ok(Verdict::NonQeNonPrimary),
            _ => Err(Error::BadParams(format!("unknown verdict {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationRecord {
    pub graph: Graph,
    pub cert: CanonicalCert,
    pub qec_value: f64,
    pub verdict: Verdict,
    /// Isometric non-QE proper subgraph; present iff the verdict is
    /// [`Verdict::NonQeNonPrimary`].
    pub witness: Option<Vec<usize>>,
    pub sieve_step: SieveStep,
}

/// Counts of one `classify_all` run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub qe: usize,
    pub non_primary: usize,
    pub primary: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.qe + self.non_primary + self.primary
    }

    pub fn of(records: &[ClassificationRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.verdict {
                Verdict::Qe => s.qe += 1,
                Verdict::NonQeNonPrimary => s.non_primary += 1,
                Verdict::NonQePrimary => s.primary += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "qe={} non_primary={} primary={}",
            self.qe, self.non_primary, self.primary
        )
    }
}

pub fn classify(g: &Graph) -> Result<ClassificationRecord> {
    if g.order() < 2 {
        return Err(Error::OrderOne);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    classify_with(&SieveContext::new(g.order())?, g)
}

/// Like [`classify`], reusing a prepared sieve context of the same order.
pub fn classify_with(ctx: &SieveContext, g: &Graph) -> Result<ClassificationRecord> {
    let d = distance_matrix(g)?;
    let trace = sieve_trace_with(ctx, g)?;
    let (verdict, witness) = if is_cnd_distance(&d) {
        (Verdict::Qe, None)
    } else {
        match isometric::witness_with_distances(g, &d) {
            Some(w) => (Verdict::NonQeNonPrimary, Some(w)),
            None => (Verdict::NonQePrimary, None),
        }
    };
    Ok(ClassificationRecord {
        graph: *g,
        cert: canonical_cert(g),
        qec_value: qec_of_distance(&d).value,
        verdict,
        witness,
        sieve_step: trace.deciding_step,
    })
}

/// One record per isomorphism class of connected graphs on `n` vertices,
/// sorted by certificate.
pub fn classify_all(n: usize) -> Result<(Vec<ClassificationRecord>, Summary)> {
    if n < 2 {
        return Err(Error::OrderOne);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let ctx = SieveContext::new(n)?;
    let graphs = enumerate_connected(n)?;
    let mut records = graphs
        .par_iter()
        .map(|g| classify_with(&ctx, g))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|r| r.cert);
    let summary = Summary::of(&records);
    Ok((records, summary))
}

//! Machine-readable reports and their JSON / CSV projections.

use serde::{Deserialize, Serialize};

use qec_core::classify::{ClassificationRecord, SieveContext, Summary};
use qec_core::{to_graph6, Catalog};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits so that printed and
/// serialized values agree.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("float round trip")
}

/// Plain decimal for moderate magnitudes, exponent form otherwise.
pub fn fmt_sig(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 || (1e-4..1e12).contains(&r.abs()) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormMatch {
    pub family: String,
    pub expression: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub id: Option<String>,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub qec: f64,
    pub verdict: String,
    pub witness: Option<Vec<usize>>,
    pub sieve_step: String,
    pub closed_forms: Vec<ClosedFormMatch>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub qe: usize,
    pub non_primary: usize,
    pub primary: usize,
}

impl From<Summary> for Counts {
    fn from(s: Summary) -> Self {
        Counts {
            qe: s.qe,
            non_primary: s.non_primary,
            primary: s.primary,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub input: String,
    pub records: Vec<Record>,
    pub summary: Counts,
}

impl Record {
    pub fn new(r: &ClassificationRecord, ctx: &SieveContext, catalog: Option<&Catalog>) -> Self {
        let closed_forms = ctx
            .family_of(&r.graph)
            .map(|(spec, cf)| ClosedFormMatch {
                family: spec.to_string(),
                expression: cf.expression.clone(),
                value: round_sig(cf.value),
            })
            .into_iter()
            .collect();
        Record {
            id: catalog
                .and_then(|c| c.identify(&r.graph))
                .map(str::to_string),
            graph6: to_graph6(&r.graph),
            n: r.graph.order(),
            edges: r.graph.edge_count(),
            qec: round_sig(r.qec_value),
            verdict: r.verdict.to_string(),
            witness: r.witness.clone(),
            sieve_step: r.sieve_step.to_string(),
            closed_forms,
        }
    }
}

impl Report {
    pub fn new(input: String, records: Vec<Record>, summary: Counts) -> Self {
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            records,
            summary,
        }
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS)?;
        for r in &self.records {
            let witness = r
                .witness
                .as_ref()
                .map(|w| w.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            let (family, expression) = r
                .closed_forms
                .first()
                .map(|c| (c.family.clone(), c.expression.clone()))
                .unwrap_or_default();
            w.write_record([
                r.id.clone().unwrap_or_default(),
                r.graph6.clone(),
                r.n.to_string(),
                r.edges.to_string(),
                fmt_sig(r.qec),
                r.verdict.clone(),
                witness,
                r.sieve_step.clone(),
                family,
                expression,
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub const CSV_COLUMNS: [&str; 10] = [
    "id",
    "graph6",
    "n",
    "edges",
    "qec",
    "verdict",
    "witness",
    "sieve_step",
    "family",
    "expression",
];

//! Six-step sieve: products, witnesses, closed-form families, regular joins,
//! explicit embeddings, and finally direct computation.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use super::enumerate::enumerate_connected;
use super::isometric::{is_isometric_mask, witness_with_distances};
use super::Verdict;
use crate::canon::{canonical_cert, CanonicalCert};
use crate::closed_form::{family_closed_form, qec_join_regular, ClosedForm};
use crate::embedding::{embed_distance, pendant_rule, verify_embedding, EMBEDDING_TOL};
use crate::error::{Error, Result};
use crate::exact::is_cnd_distance;
use crate::family::{build_family, FamilySpec};
use crate::graph::{bits, distance_matrix, mask_of_order, DistanceMatrix, Graph};
use crate::ops::{compose, induced_by_mask, ComposeKind};
use crate::qec::qec_of_distance;

/// Numeric values at or below this count as non-positive.
pub const SIGN_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SieveStep {
    /// Step 1: Cartesian or star product of two QE graphs.
    Product,
    /// Step 2: contains an isometric non-QE proper subgraph.
    NonQeWitness,
    /// Step 3: isomorphic to a family with a closed-form constant.
    ClosedForm,
    /// Step 4: join of two regular graphs.
    RegularJoin,
    /// Step 5: pendant edge or an explicit embedding.
    ExplicitEmbedding,
    /// Step 6: exact test and numeric constant.
    DirectComputation,
}

impl SieveStep {
    pub const ALL: [SieveStep; 6] = [
        SieveStep::Product,
        SieveStep::NonQeWitness,
        SieveStep::ClosedForm,
        SieveStep::RegularJoin,
        SieveStep::ExplicitEmbedding,
        SieveStep::DirectComputation,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn label(self) -> &'static str {
        match self {
            SieveStep::Product => "Step1",
            SieveStep::NonQeWitness => "Step2",
            SieveStep::ClosedForm => "Step3",
            SieveStep::RegularJoin => "Step4",
            SieveStep::ExplicitEmbedding => "Step5",
            SieveStep::DirectComputation => "Step6",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SieveStep::Product => "product of QE graphs",
            SieveStep::NonQeWitness => "non-QE witness",
            SieveStep::ClosedForm => "closed-form family",
            SieveStep::RegularJoin => "join of regular graphs",
            SieveStep::ExplicitEmbedding => "explicit embedding",
            SieveStep::DirectComputation => "direct computation",
        }
    }
}

impl fmt::Display for SieveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// How a product structure was detected in step 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Star,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SieveEntry {
    pub step: SieveStep,
    pub outcome: String,
    /// Set on the deciding entry only.
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SieveTrace {
    pub entries: Vec<SieveEntry>,
    pub verdict: Verdict,
    pub deciding_step: SieveStep,
    pub product: Option<ProductKind>,
    /// Closed-form family match, if any was found on the way.
    pub family: Option<(FamilySpec, ClosedForm)>,
}

/// Precomputed comparison data for graphs of one order.
#[derive(Clone, Debug)]
pub struct SieveContext {
    order: usize,
    cartesian: HashMap<CanonicalCert, (Graph, Graph)>,
    families: HashMap<CanonicalCert, (FamilySpec, ClosedForm)>,
}

impl SieveContext {
    pub fn new(order: usize) -> Result<Self> {
        let mut cartesian = HashMap::new();
        for a in 2..=order {
            if order % a != 0 || a * a > order {
                continue;
            }
            let b = order / a;
            let qe = |k: usize| -> Result<Vec<Graph>> {
                Ok(enumerate_connected(k)?
                    .into_iter()
                    .filter(|g| is_cnd_distance(&distance_matrix(g).expect("connected")))
                    .collect())
            };
            let (left, right) = (qe(a)?, qe(b)?);
            for g1 in &left {
                for g2 in &right {
                    let p = compose(ComposeKind::Cartesian, g1, g2, None)?;
                    cartesian.entry(canonical_cert(&p)).or_insert((*g1, *g2));
                }
            }
        }

        let mut families = HashMap::new();
        for spec in family_specs(order) {
            let g = build_family(&spec)?;
            if let Ok(cf) = family_closed_form(&spec) {
                families.entry(canonical_cert(&g)).or_insert((spec, cf));
            }
        }
        Ok(SieveContext {
            order,
            cartesian,
            families,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Closed-form family isomorphic to `g`, if any.
    pub fn family_of(&self, g: &Graph) -> Option<&(FamilySpec, ClosedForm)> {
        self.families.get(&canonical_cert(g))
    }
}

/// Every family member of order `n` with a closed form.
fn family_specs(n: usize) -> Vec<FamilySpec> {
    let mut specs = vec![FamilySpec::Complete(n), FamilySpec::Path(n)];
    if n >= 3 {
        specs.push(FamilySpec::Cycle(n));
    }
    specs.extend(
        partitions(n)
            .into_iter()
            .filter(|p| p.len() >= 2)
            .map(FamilySpec::CompleteMultipartite),
    );
    if n >= 2 {
        specs.extend((1..n).map(|m| FamilySpec::Wedge(n - 1, m)));
    }
    if n >= 5 {
        specs.push(FamilySpec::KnMinusP4(n));
    }
    specs
}

/// Integer partitions of `n`, parts descending.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn set_string(mask: u16) -> String {
    format!("{{{}}}", bits(mask).map(|v| v.to_string()).join(","))
}

fn first_cut_vertex(g: &Graph) -> Option<usize> {
    let full = mask_of_order(g.order());
    (0..g.order()).find(|&v| !g.is_connected_within(full & !(1 << v)))
}

/// Component of `g - v` containing the least remaining vertex.
fn component_without(g: &Graph, v: usize) -> u16 {
    let rest = mask_of_order(g.order()) & !(1 << v);
    let start = rest.trailing_zeros() as usize;
    let mut seen: u16 = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= g.neighbor_mask(u);
        }
        next &= rest & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

fn verdict_from_value(value: f64) -> Verdict {
    // Reached only after the witness search failed, so a non-QE graph here
    // is primary.
    if value <= SIGN_TOL {
        Verdict::Qe
    } else {
        Verdict::NonQePrimary
    }
}

/// Replays the sieve on `g` using a context of matching order.
pub fn sieve_trace_with(ctx: &SieveContext, g: &Graph) -> Result<SieveTrace> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOne);
    }
    if n != ctx.order {
        return Err(Error::DimensionMismatch {
            expected: ctx.order,
            found: n,
        });
    }
    let d = distance_matrix(g)?;
    let cert = canonical_cert(g);
    let family = ctx.families.get(&cert).cloned();
    let mut entries = Vec::new();
    let done = |entries: Vec<SieveEntry>, step, verdict, product, family| {
        Ok(SieveTrace {
            entries,
            verdict,
            deciding_step: step,
            product,
            family,
        })
    };

    // Step 1
    if let Some((g1, g2)) = ctx.cartesian.get(&cert) {
        entries.push(SieveEntry {
            step: SieveStep::Product,
            outcome: format!(
                "Cartesian product of QE graphs on {} and {} vertices",
                g1.order(),
                g2.order()
            ),
            verdict: Some(Verdict::Qe),
        });
        return done(
            entries,
            SieveStep::Product,
            Verdict::Qe,
            Some(ProductKind::Cartesian),
            family,
        );
    }
    if let Some(v) = first_cut_vertex(g) {
        let side = component_without(g, v);
        let left = side | 1 << v;
        let right = (mask_of_order(n) & !side) | 1 << v;
        let left_qe = is_cnd_distance(&d.restrict(&bits(left).collect::<Vec<_>>()));
        let right_qe = is_cnd_distance(&d.restrict(&bits(right).collect::<Vec<_>>()));
        if left_qe && right_qe {
            entries.push(SieveEntry {
                step: SieveStep::Product,
                outcome: format!(
                    "star product of QE graphs on {} and {} at cut vertex {v}",
                    set_string(left),
                    set_string(right)
                ),
                verdict: Some(Verdict::Qe),
            });
            return done(
                entries,
                SieveStep::Product,
                Verdict::Qe,
                Some(ProductKind::Star),
                family,
            );
        }
        entries.push(SieveEntry {
            step: SieveStep::Product,
            outcome: format!("star product at cut vertex {v} has a non-QE factor"),
            verdict: None,
        });
    } else {
        entries.push(SieveEntry {
            step: SieveStep::Product,
            outcome: "no product structure".into(),
            verdict: None,
        });
    }

    // Step 2
    if let Some(w) = witness_with_distances(g, &d) {
        let mask = w.iter().fold(0u16, |m, &v| m | 1 << v);
        entries.push(SieveEntry {
            step: SieveStep::NonQeWitness,
            outcome: format!("isometric non-QE subgraph on {}", set_string(mask)),
            verdict: Some(Verdict::NonQeNonPrimary),
        });
        return done(
            entries,
            SieveStep::NonQeWitness,
            Verdict::NonQeNonPrimary,
            None,
            family,
        );
    }
    entries.push(SieveEntry {
        step: SieveStep::NonQeWitness,
        outcome: "no witness".into(),
        verdict: None,
    });

    // Step 3
    if let Some((spec, cf)) = &family {
        let verdict = verdict_from_value(cf.value);
        entries.push(SieveEntry {
            step: SieveStep::ClosedForm,
            outcome: format!("{spec}: QEC = {} = {:.10}", cf.expression, cf.value),
            verdict: Some(verdict),
        });
        return done(entries, SieveStep::ClosedForm, verdict, None, family);
    }
    entries.push(SieveEntry {
        step: SieveStep::ClosedForm,
        outcome: "no family match".into(),
        verdict: None,
    });

    // Step 4
    if let Some((left, value)) = regular_join(g) {
        let verdict = verdict_from_value(value);
        entries.push(SieveEntry {
            step: SieveStep::RegularJoin,
            outcome: format!(
                "join of regular graphs on {} and {}: QEC = {value:.10}",
                set_string(left),
                set_string(mask_of_order(n) & !left)
            ),
            verdict: Some(verdict),
        });
        return done(entries, SieveStep::RegularJoin, verdict, None, family);
    }
    entries.push(SieveEntry {
        step: SieveStep::RegularJoin,
        outcome: "no regular join".into(),
        verdict: None,
    });

    // Step 5
    if let Some(lift) = pendant_rule(g) {
        let w = lift.witness;
        entries.push(SieveEntry {
            step: SieveStep::ExplicitEmbedding,
            outcome: format!(
                "pendant edge {}~{} over {}~{}, lifted embedding defect {:.3e}",
                w.a_prime, w.b_prime, w.a, w.b, lift.defect
            ),
            verdict: Some(Verdict::Qe),
        });
        return done(
            entries,
            SieveStep::ExplicitEmbedding,
            Verdict::Qe,
            None,
            family,
        );
    }
    if let Some(base) = square_base(g, &d) {
        if is_cnd_distance(&d) {
            let e = embed_distance(&d);
            let defect = verify_embedding(&e, &d)?;
            if defect <= EMBEDDING_TOL {
                entries.push(SieveEntry {
                    step: SieveStep::ExplicitEmbedding,
                    outcome: format!(
                        "embedding extends QE subgraph on {} (dim {}, defect {defect:.3e})",
                        set_string(base),
                        e.dim
                    ),
                    verdict: Some(Verdict::Qe),
                });
                return done(
                    entries,
                    SieveStep::ExplicitEmbedding,
                    Verdict::Qe,
                    None,
                    family,
                );
            }
        }
        entries.push(SieveEntry {
            step: SieveStep::ExplicitEmbedding,
            outcome: format!(
                "embedding of QE subgraph on {} does not extend",
                set_string(base)
            ),
            verdict: None,
        });
    } else {
        entries.push(SieveEntry {
            step: SieveStep::ExplicitEmbedding,
            outcome: "no pendant edge or square-containing base".into(),
            verdict: None,
        });
    }

    // Step 6
    let exact_qe = is_cnd_distance(&d);
    let report = qec_of_distance(&d);
    let verdict = if exact_qe {
        Verdict::Qe
    } else {
        Verdict::NonQePrimary
    };
    entries.push(SieveEntry {
        step: SieveStep::DirectComputation,
        outcome: format!(
            "exact test {}, QEC = {:.10}",
            if exact_qe { "QE" } else { "non-QE" },
            report.value
        ),
        verdict: Some(verdict),
    });
    done(entries, SieveStep::DirectComputation, verdict, None, family)
}

/// Splits `g = G₁ + G₂` with both sides regular; returns the side holding
/// vertex 0 and the closed-form value.
fn regular_join(g: &Graph) -> Option<(u16, f64)> {
    let n = g.order();
    let full = mask_of_order(n);
    for left in (1u16..full).filter(|m| m & 1 == 1) {
        let right = full & !left;
        if right == 0 {
            continue;
        }
        if !bits(left).all(|v| g.neighbor_mask(v) & right == right) {
            continue;
        }
        let (g1, g2) = (induced_by_mask(g, left), induced_by_mask(g, right));
        if let Ok(value) = qec_join_regular(&g1, &g2) {
            return Some((left, value));
        }
    }
    None
}

/// Largest proper isometric QE induced subgraph containing a 4-cycle
/// (not necessarily induced), least vertex set first.
fn square_base(g: &Graph, d: &DistanceMatrix) -> Option<u16> {
    let n = g.order();
    for size in (4..n).rev() {
        for set in (0..n).combinations(size) {
            let mask = set.iter().fold(0u16, |m, &v| m | 1 << v);
            if g.is_connected_within(mask)
                && has_square(g, mask)
                && is_isometric_mask(g, d, mask)
                && is_cnd_distance(&d.restrict(&set))
            {
                return Some(mask);
            }
        }
    }
    None
}

fn has_square(g: &Graph, mask: u16) -> bool {
    bits(mask)
        .tuple_combinations()
        .any(|(a, c)| (g.neighbor_mask(a) & g.neighbor_mask(c) & mask).count_ones() >= 2)
}

pub fn sieve_trace(g: &Graph) -> Result<SieveTrace> {
    if g.order() < 2 {
        return Err(Error::OrderOne);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    sieve_trace_with(&SieveContext::new(g.order())?, g)
}

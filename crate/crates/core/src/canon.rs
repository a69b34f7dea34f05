//! Canonical labeling by individualization and refinement.
//!
//! The search tree is built from an isomorphism-invariant ordered partition:
//! equitable refinement by neighbour counts, then individualization of each
//! vertex of the first non-singleton cell. Every leaf is a discrete partition
//! and thus a relabeling; the certificate is the least adjacency bit-string
//! over all leaves. Twins inside the target cell (vertices whose swap is an
//! automorphism) are explored once.

use std::fmt;

use crate::graph::{Graph, MAX_ORDER};

/// Upper-triangle adjacency bits of the canonical relabeling, read in graph6
/// order `(0,1), (0,2), (1,2), (0,3), ...` with the first pair as the most
/// significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert {
    n: u8,
    bits: u64,
}

impl CanonicalCert {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Number of adjacency bits, `n(n-1)/2`.
    pub fn width(&self) -> usize {
        let n = self.order();
        n * (n - 1) / 2
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u16; n];
        let mut shift = self.width();
        for j in 1..n {
            for i in 0..j {
                shift -= 1;
                if self.bits >> shift & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows(n, &rows)
    }

    pub fn to_bit_string(&self) -> String {
        let w = self.width();
        (0..w)
            .rev()
            .map(|s| if self.bits >> s & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCert(n={}, {})", self.n, self.to_bit_string())
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.n, self.to_bit_string())
    }
}

/// Adjacency bits of `g` under the labeling that places `order[i]` at
/// position `i`.
pub(crate) fn bits_under(g: &Graph, order: &[u8]) -> u64 {
    let n = g.order();
    let mut bits = 0u64;
    for j in 1..n {
        let row = g.neighbor_mask(order[j] as usize);
        for &vi in &order[..j] {
            bits = bits << 1 | u64::from(row >> vi & 1);
        }
    }
    bits
}

#[derive(Clone, Copy)]
struct Partition {
    verts: [u8; MAX_ORDER],
    /// `cell_end[i]` marks the last position of a cell.
    cell_end: [bool; MAX_ORDER],
    n: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut verts = [0u8; MAX_ORDER];
        for (i, v) in verts.iter_mut().enumerate().take(n) {
            *v = i as u8;
        }
        let mut cell_end = [false; MAX_ORDER];
        cell_end[n - 1] = true;
        Partition { verts, cell_end, n }
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut start = 0;
        (0..self.n).filter_map(move |i| {
            if self.cell_end[i] {
                let c = (start, i + 1);
                start = i + 1;
                Some(c)
            } else {
                None
            }
        })
    }

    fn is_discrete(&self) -> bool {
        self.cell_end[..self.n].iter().all(|&e| e)
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let masks: Vec<u16> = self
                .cells()
                .map(|(s, e)| self.verts[s..e].iter().fold(0u16, |m, &v| m | 1 << v))
                .collect();
            let key = |v: u8| -> u64 {
                let row = g.neighbor_mask(v as usize);
                masks
                    .iter()
                    .fold(0u64, |k, &m| k << 4 | u64::from((row & m).count_ones()))
            };
            let mut changed = false;
            let cells: Vec<(usize, usize)> = self.cells().collect();
            for (s, e) in cells {
                if e - s == 1 {
                    continue;
                }
                let mut keyed: Vec<(u64, u8)> =
                    self.verts[s..e].iter().map(|&v| (key(v), v)).collect();
                keyed.sort_unstable();
                for (i, &(k, v)) in keyed.iter().enumerate() {
                    self.verts[s + i] = v;
                    if i + 1 < keyed.len() && keyed[i + 1].0 != k {
                        self.cell_end[s + i] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Moves `v` (in the cell starting at `s`) to the front and splits it off.
    fn individualize(&self, s: usize, v: u8) -> Self {
        let mut p = *self;
        let pos = (s..self.n)
            .find(|&i| p.verts[i] == v)
            .expect("vertex in cell");
        p.verts[s..=pos].rotate_right(1);
        p.cell_end[s] = true;
        p
    }
}

fn search(g: &Graph, mut p: Partition, best: &mut u64) {
    p.refine(g);
    if p.is_discrete() {
        let bits = bits_under(g, &p.verts[..p.n]);
        if bits < *best {
            *best = bits;
        }
        return;
    }
    let (s, e) = p
        .cells()
        .find(|(s, e)| e - s > 1)
        .expect("non-discrete partition");
    let mut explored: Vec<u8> = Vec::with_capacity(e - s);
    for &v in &p.verts[s..e] {
        let twin = explored.iter().any(|&w| {
            let nv = g.neighbor_mask(v as usize) & !(1 << w);
            let nw = g.neighbor_mask(w as usize) & !(1 << v);
            nv == nw
        });
        if twin {
            continue;
        }
        explored.push(v);
        search(g, p.individualize(s, v), best);
    }
}

pub fn canonical_cert(g: &Graph) -> CanonicalCert {
    let n = g.order();
    let mut best = u64::MAX;
    search(g, Partition::unit(n), &mut best);
    CanonicalCert {
        n: n as u8,
        bits: if n < 2 { 0 } else { best },
    }
}

/// Relabeling that maps `g` onto its canonical representative.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_cert(g).to_graph()
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order()
        && g1.edge_count() == g2.edge_count()
        && canonical_cert(g1) == canonical_cert(g2)
}

//! Simple undirected graphs on at most [`MAX_ORDER`] vertices and their
//! shortest-path distance matrices.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 10;

/// A labeled simple graph on vertices `0..n`. Row `v` of the adjacency is
/// stored as a bitmask of the neighbours of `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = mask_of_order(n);
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, rows: &[u16]) -> Self {
        debug_assert!(n <= MAX_ORDER && rows.len() == n);
        let mut adj = [0; MAX_ORDER];
        adj[..n].copy_from_slice(rows);
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(mask_of_order(self.n))
    }

    /// Whether the subgraph induced on the vertex mask `set` is connected.
    /// The empty set is treated as disconnected.
    pub fn is_connected_within(&self, set: u16) -> bool {
        if set == 0 {
            return false;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen: u16 = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= set & !seen;
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    pub fn complement(&self) -> Graph {
        let full = mask_of_order(self.n);
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = [0u16; MAX_ORDER];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Adjacency matrix as `f64` rows.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Integer shortest-path distances of a connected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.entries[x * self.n + y]
    }

    pub fn max_entry(&self) -> u8 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&d| f64::from(d)).collect())
            .collect()
    }

    /// Restriction to the (sorted) vertex list `vs`.
    pub fn restrict(&self, vs: &[usize]) -> DistanceMatrix {
        let k = vs.len();
        let mut entries = Vec::with_capacity(k * k);
        for &x in vs {
            for &y in vs {
                entries.push(self.get(x, y));
            }
        }
        DistanceMatrix { n: k, entries }
    }
}

/// Breadth-first distances from every vertex.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let full = mask_of_order(n);
    let mut entries = vec![0u8; n * n];
    for s in 0..n {
        let mut seen: u16 = 1 << s;
        let mut frontier = seen;
        let mut depth = 0u8;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u16;
            for v in bits(frontier) {
                next |= g.neighbor_mask(v);
            }
            next &= !seen;
            for v in bits(next) {
                entries[s * n + v] = depth;
            }
            seen |= next;
            frontier = next;
        }
        if seen != full {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, entries })
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(distance_matrix(g)?.max_entry() as usize)
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGraph)
    } else if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn mask_of_order(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u16) -> impl Iterator<Item = usize> + Clone {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Validates a vertex list against `g` and returns it as a bitmask.
pub(crate) fn vertex_mask(g: &Graph, set: &[usize]) -> Result<u16> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut mask = 0u16;
    for &v in set {
        g.check_vertex(v)?;
        mask |= 1 << v;
    }
    Ok(mask)
}

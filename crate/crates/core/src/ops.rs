//! Graph constructions: products, joins, apexes and induced subgraphs.

use crate::error::{Error, Result};
use crate::graph::{bits, check_order, vertex_mask, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComposeKind {
    /// Vertex `(x, y)` gets label `x * n2 + y`.
    Cartesian,
    /// `g1` keeps its labels; `g2`'s root is identified with `g1`'s root and
    /// its remaining vertices follow in order.
    Star,
    /// `g1` then `g2` (offset by `n1`), plus every cross edge.
    Join,
}

pub fn compose(
    kind: ComposeKind,
    g1: &Graph,
    g2: &Graph,
    roots: Option<(usize, usize)>,
) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    match kind {
        ComposeKind::Cartesian => {
            check_order(n1 * n2)?;
            let mut g = Graph::empty(n1 * n2)?;
            for x in 0..n1 {
                for y in 0..n2 {
                    for y2 in g2.neighbors(y) {
                        g.add_edge(x * n2 + y, x * n2 + y2)?;
                    }
                    for x2 in g1.neighbors(x) {
                        g.add_edge(x * n2 + y, x2 * n2 + y)?;
                    }
                }
            }
            Ok(g)
        }
        ComposeKind::Star => {
            let (o1, o2) = roots.ok_or(Error::BadRoot(usize::MAX))?;
            if o1 >= n1 {
                return Err(Error::BadRoot(o1));
            }
            if o2 >= n2 {
                return Err(Error::BadRoot(o2));
            }
            check_order(n1 + n2 - 1)?;
            let map = |y: usize| match y.cmp(&o2) {
                std::cmp::Ordering::Equal => o1,
                std::cmp::Ordering::Less => n1 + y,
                std::cmp::Ordering::Greater => n1 + y - 1,
            };
            let mut edges = g1.edges();
            edges.extend(g2.edges().into_iter().map(|(u, v)| (map(u), map(v))));
            Graph::from_edges(n1 + n2 - 1, &edges)
        }
        ComposeKind::Join => {
            check_order(n1 + n2)?;
            let mut edges = g1.edges();
            edges.extend(g2.edges().into_iter().map(|(u, v)| (u + n1, v + n1)));
            for u in 0..n1 {
                for v in 0..n2 {
                    edges.push((u, n1 + v));
                }
            }
            Graph::from_edges(n1 + n2, &edges)
        }
    }
}

/// Disjoint union, `g2` relabeled after `g1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.order();
    check_order(n1 + g2.order())?;
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (u + n1, v + n1)));
    Graph::from_edges(n1 + g2.order(), &edges)
}

/// Adds vertex `n` adjacent exactly to `set`.
pub fn add_apex(g: &Graph, set: &[usize]) -> Result<Graph> {
    vertex_mask(g, set)?;
    let n = g.order();
    check_order(n + 1)?;
    let mut edges = g.edges();
    edges.extend(set.iter().map(|&v| (v, n)));
    Graph::from_edges(n + 1, &edges)
}

/// Subgraph induced on `set`, relabeled `0..|set|` in ascending vertex order.
pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Result<Graph> {
    let mask = vertex_mask(g, set)?;
    Ok(induced_by_mask(g, mask))
}

pub(crate) fn induced_by_mask(g: &Graph, mask: u16) -> Graph {
    let vs: Vec<usize> = bits(mask).collect();
    let mut rows = vec![0u16; vs.len()];
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate() {
            if g.has_edge(u, v) {
                rows[i] |= 1 << j;
            }
        }
    }
    Graph::from_rows(vs.len(), &rows)
}

/// A pendant edge `a' ~ b'` hanging off the edge `a ~ b`:
/// `a ~ a' ~ b' ~ b ~ a` with `deg(a') = deg(b') = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PendantEdge {
    pub a: usize,
    pub b: usize,
    pub a_prime: usize,
    pub b_prime: usize,
}

/// Lexicographically least `(a, b, a', b')` witness, if any.
pub fn find_pendant_edge(g: &Graph) -> Option<PendantEdge> {
    let n = g.order();
    for a in 0..n {
        for b in g.neighbors(a) {
            for a_prime in g.neighbors(a) {
                if a_prime == b || g.degree(a_prime) != 2 {
                    continue;
                }
                for b_prime in g.neighbors(b) {
                    if b_prime == a || b_prime == a_prime || g.degree(b_prime) != 2 {
                        continue;
                    }
                    if g.has_edge(a_prime, b_prime) {
                        return Some(PendantEdge {
                            a,
                            b,
                            a_prime,
                            b_prime,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::family::build_family;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cartesian_ladder() {
        let g = compose(
            ComposeKind::Cartesian,
            &fam("complete:2"),
            &fam("path:3"),
            None,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 3).count(), 2);
    }

    #[test]
    fn join_of_edgeless_is_complete_bipartite() {
        let e3 = Graph::empty(3).unwrap();
        let g = compose(ComposeKind::Join, &e3, &e3, None).unwrap();
        assert!(is_isomorphic(&g, &fam("multipartite:3,3")));
    }

    #[test]
    fn star_product_edges() {
        let g = compose(
            ComposeKind::Star,
            &fam("complete:5"),
            &fam("complete:2"),
            Some((0, 0)),
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 11);
        assert!(g.has_edge(0, 5));
    }

    #[test]
    fn star_product_bad_root() {
        let k2 = fam("complete:2");
        assert_eq!(
            compose(ComposeKind::Star, &k2, &k2, Some((2, 0))),
            Err(Error::BadRoot(2))
        );
        assert_eq!(
            compose(ComposeKind::Star, &k2, &k2, Some((0, 5))),
            Err(Error::BadRoot(5))
        );
        assert!(compose(ComposeKind::Star, &k2, &k2, None).is_err());
    }

    #[test]
    fn wedge_matches_star_product() {
        let w = fam("wedge:5,1");
        let s = compose(
            ComposeKind::Star,
            &fam("complete:5"),
            &fam("complete:2"),
            Some((0, 0)),
        )
        .unwrap();
        assert!(is_isomorphic(&w, &s));
    }

    #[test]
    fn apex_constructions() {
        let c5 = fam("cycle:5");
        let adj = add_apex(&c5, &[0, 1]).unwrap();
        let nonadj = add_apex(&c5, &[0, 2]).unwrap();
        assert!(!is_isomorphic(&adj, &nonadj));

        let k5 = fam("complete:5");
        assert!(is_isomorphic(
            &add_apex(&k5, &[0, 1, 2]).unwrap(),
            &fam("wedge:5,3")
        ));

        let wheel = add_apex(&c5, &[0, 1, 2, 3, 4]).unwrap();
        let join = compose(ComposeKind::Join, &Graph::empty(1).unwrap(), &c5, None).unwrap();
        assert!(is_isomorphic(&wheel, &join));

        assert_eq!(add_apex(&c5, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = induced_subgraph(&fam("cycle:5"), &[0, 1, 2, 3]).unwrap();
        assert_eq!(p4, fam("path:4"));
        assert_eq!(
            induced_subgraph(&fam("complete:6"), &[1, 2, 4, 5]).unwrap(),
            fam("complete:4")
        );
        let p3 = induced_subgraph(&fam("multipartite:3,2"), &[0, 1, 3]).unwrap();
        assert!(is_isomorphic(&p3, &fam("path:3")));
        assert_eq!(induced_subgraph(&p3, &[]), Err(Error::EmptySet));
    }

    #[test]
    fn pendant_edges() {
        let c4 = fam("cycle:4");
        let w = find_pendant_edge(&c4).unwrap();
        assert_eq!((w.a, w.b, w.a_prime, w.b_prime), (0, 1, 3, 2));
        assert_eq!(find_pendant_edge(&fam("complete:4")), None);
        // two squares sharing the edge {1, 4}
        let domino =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
                .unwrap();
        assert!(find_pendant_edge(&domino).is_some());
    }

    #[test]
    fn pendant_witness_is_least_by_scan() {
        let domino =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
                .unwrap();
        let mut found = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                for ap in 0..6 {
                    for bp in 0..6 {
                        let distinct = [a, b, ap, bp]
                            .iter()
                            .collect::<std::collections::HashSet<_>>()
                            .len()
                            == 4;
                        if distinct
                            && domino.has_edge(a, ap)
                            && domino.has_edge(ap, bp)
                            && domino.has_edge(bp, b)
                            && domino.has_edge(b, a)
                            && domino.degree(ap) == 2
                            && domino.degree(bp) == 2
                        {
                            found.push((a, b, ap, bp));
                        }
                    }
                }
            }
        }
        let w = find_pendant_edge(&domino).unwrap();
        assert_eq!(Some(&(w.a, w.b, w.a_prime, w.b_prime)), found.iter().min());
    }

    #[test]
    fn oversized_products_rejected() {
        let p4 = fam("path:4");
        assert_eq!(
            compose(ComposeKind::Cartesian, &p4, &p4, None),
            Err(Error::OrderTooLarge(16))
        );
    }
}

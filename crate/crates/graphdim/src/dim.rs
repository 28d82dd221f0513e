//! Exact evaluation of the inductive graph dimension.
//!
//! dim of the empty graph is -1; otherwise dim G is the average over vertices
//! of 1 + dim of the vertex's unit sphere. Every sphere of an induced subgraph
//! of the host is itself an induced subgraph of the host, so the recursion
//! works entirely on vertex subsets and memoizes on them.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ratio::{rat_int, rat_usize, Rational};
use num_traits::{One, Zero};

/// Memo table mapping vertex subsets of one host graph to their dimensions.
#[derive(Default)]
pub struct DimCache {
    table: HashMap<VertexSet, Rational>,
}

impl DimCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

fn dim_subset_memo(g: &Graph, s: &VertexSet, table: &mut HashMap<VertexSet, Rational>) -> Rational {
    if s.is_empty() {
        return rat_int(-1);
    }
    if let Some(d) = table.get(s) {
        return d.clone();
    }
    let mut sum = Rational::zero();
    for v in s.iter() {
        let sphere = g.neighbors(v).intersection(s);
        sum += Rational::one() + dim_subset_memo(g, &sphere, table);
    }
    let d = sum / rat_usize(s.len());
    table.insert(s.clone(), d.clone());
    d
}

fn dim_subset_plain(g: &Graph, s: &VertexSet) -> Rational {
    if s.is_empty() {
        return rat_int(-1);
    }
    let mut sum = Rational::zero();
    for v in s.iter() {
        let sphere = g.neighbors(v).intersection(s);
        sum += Rational::one() + dim_subset_plain(g, &sphere);
    }
    sum / rat_usize(s.len())
}

/// Dimension of the induced subgraph of `g` over `s`, sharing `cache`.
pub fn dim_subset(g: &Graph, s: &VertexSet, cache: &mut DimCache) -> Rational {
    dim_subset_memo(g, s, &mut cache.table)
}

/// Inductive dimension of `g` (memoized).
pub fn dim(g: &Graph) -> Rational {
    dim_subset_memo(g, &g.full_vertex_set(), &mut HashMap::new())
}

/// Direct unmemoized recursion; the brute-force reference for `dim`.
pub fn dim_unmemoized(g: &Graph) -> Rational {
    dim_subset_plain(g, &g.full_vertex_set())
}

/// Dimension of a vertex: 1 + dim of its unit sphere.
pub fn vertex_dim(g: &Graph, v: usize) -> Result<Rational> {
    let mut cache = DimCache::new();
    vertex_dim_cached(g, v, &mut cache)
}

pub fn vertex_dim_cached(g: &Graph, v: usize, cache: &mut DimCache) -> Result<Rational> {
    g.check_vertex(v)?;
    Ok(Rational::one() + dim_subset(g, g.neighbors(v), cache))
}

/// Per-vertex dimensions plus graph-level flags.
#[derive(Clone, Debug)]
pub struct DimReport {
    pub graph_dim: Rational,
    pub vertex_dims: Vec<Rational>,
    /// All vertex dimensions equal.
    pub is_uniform: bool,
    /// All maximal cliques of the same order (vacuously true for the empty graph).
    pub is_pure: bool,
    pub omega: usize,
    pub gamma: usize,
}

pub fn dim_spectrum(g: &Graph) -> DimReport {
    let mut cache = DimCache::new();
    let vertex_dims: Vec<Rational> = (0..g.order())
        .map(|v| vertex_dim_cached(g, v, &mut cache).expect("vertex in range"))
        .collect();
    let graph_dim = if vertex_dims.is_empty() {
        rat_int(-1)
    } else {
        vertex_dims.iter().sum::<Rational>() / rat_usize(vertex_dims.len())
    };
    let is_uniform = vertex_dims.windows(2).all(|w| w[0] == w[1]);
    let (omega, gamma, is_pure) = if g.is_graph_empty() {
        (0, 0, true)
    } else {
        let omega = crate::cliques::clique_number(g).expect("nonempty");
        let gamma = crate::cliques::min_clique_number(g).expect("nonempty");
        (omega, gamma, omega == gamma)
    };
    DimReport {
        graph_dim,
        vertex_dims,
        is_uniform,
        is_pure,
        omega,
        gamma,
    }
}

/// Lemma check: dim of a disjoint union vs the order-weighted average of the
/// component dimensions. Returns (lhs, rhs); the caller asserts equality.
pub fn check_disjoint_union_law(components: &[Graph]) -> Result<(Rational, Rational)> {
    let total: usize = components.iter().map(Graph::order).sum();
    if total == 0 {
        return Err(crate::error::GraphError::EmptyInput);
    }
    let mut whole = Graph::empty();
    for c in components {
        whole = whole.disjoint_union(c);
    }
    let lhs = dim(&whole);
    let rhs = components
        .iter()
        .filter(|c| !c.is_graph_empty())
        .map(|c| rat_usize(c.order()) * dim(c))
        .sum::<Rational>()
        / rat_usize(total);
    Ok((lhs, rhs))
}

/// Lemma check: dim(G1 + G2) vs 1 + dim G1 + dim G2.
pub fn check_join_law(g1: &Graph, g2: &Graph) -> (Rational, Rational) {
    let lhs = dim(&g1.join(g2));
    let rhs = Rational::one() + dim(g1) + dim(g2);
    (lhs, rhs)
}

/// Corollary check: dim of a k-fold join vs (k - 1) + sum of part dimensions.
pub fn check_iterated_join_law(parts: &[Graph]) -> Result<(Rational, Rational)> {
    if parts.is_empty() {
        return Err(crate::error::GraphError::EmptyInput);
    }
    let mut whole = parts[0].clone();
    for p in &parts[1..] {
        whole = whole.join(p);
    }
    let lhs = dim(&whole);
    let rhs = rat_int(parts.len() as i64 - 1) + parts.iter().map(dim).sum::<Rational>();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::ratio::rat;

    #[test]
    fn base_values() {
        assert_eq!(dim(&Graph::empty()), rat_int(-1));
        assert_eq!(dim(&Graph::edgeless(5)), rat_int(0));
        for n in 1..=8 {
            assert_eq!(dim(&generators::complete(n)), rat_int(n as i64 - 1));
        }
        assert_eq!(dim(&generators::cycle(3).unwrap()), rat_int(2));
        for n in 4..=12 {
            assert_eq!(dim(&generators::cycle(n).unwrap()), rat_int(1));
        }
        assert_eq!(dim(&generators::path(7)), rat_int(1));
    }

    #[test]
    fn double_k4_matching_has_dim_five_halves() {
        // two K_4s joined by a perfect matching: every sphere is K_3 + K_1
        let g = generators::double_clique_matching(4).unwrap();
        assert_eq!(dim_unmemoized(&g), rat(5, 2));
        assert_eq!(dim(&g), rat(5, 2));
    }

    #[test]
    fn union_of_k4_and_isolated_vertices() {
        let g = generators::complete(4).disjoint_union(&Graph::edgeless(4));
        assert_eq!(dim_unmemoized(&g), rat(3, 2));
        assert_eq!(dim(&g), rat(3, 2));
    }

    #[test]
    fn vertex_dim_examples() {
        let k5 = generators::complete(5);
        for v in 0..5 {
            assert_eq!(vertex_dim(&k5, v).unwrap(), rat_int(4));
        }
        let path3 = generators::path(3);
        assert_eq!(vertex_dim(&path3, 0).unwrap(), rat_int(1));
        assert!(vertex_dim(&path3, 3).is_err());
    }

    #[test]
    fn spectrum_of_clique_with_pendant_clique() {
        // K_4 on {0,1,2,3} plus the edge {3,4}
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
        )
        .unwrap();
        let r = dim_spectrum(&g);
        assert_eq!(r.vertex_dims[0], rat_int(3));
        assert_eq!(r.vertex_dims[1], rat_int(3));
        assert_eq!(r.vertex_dims[2], rat_int(3));
        assert_eq!(r.vertex_dims[3], rat(5, 2));
        assert_eq!(r.vertex_dims[4], rat_int(1));
        assert_eq!(r.graph_dim, rat(5, 2));
        assert!(!r.is_uniform);
        // verify against the oracle
        assert_eq!(dim_unmemoized(&g), rat(5, 2));
    }

    #[test]
    fn spectrum_of_windmill_is_uniform_and_pure() {
        let g = generators::windmill(3).unwrap();
        let r = dim_spectrum(&g);
        assert!(r.is_uniform && r.is_pure);
        assert_eq!(r.graph_dim, rat_int(2));
        assert!(r.vertex_dims.iter().all(|d| *d == rat_int(2)));
        assert_eq!(dim_unmemoized(&g), rat_int(2));
    }

    #[test]
    fn petersen_is_one_dimensional() {
        let g = crate::generators::petersen();
        let r = dim_spectrum(&g);
        assert!(r.vertex_dims.iter().all(|d| *d == rat_int(1)));
        assert_eq!(r.graph_dim, rat_int(1));
    }

    #[test]
    fn union_law_examples() {
        let k3 = generators::complete(3);
        let (l, r) = check_disjoint_union_law(&[k3.clone(), k3.clone()]).unwrap();
        assert_eq!((l.clone(), r), (rat_int(2), l));

        let parts = vec![
            generators::complete(4),
            Graph::edgeless(1),
            Graph::edgeless(1),
            Graph::edgeless(1),
            Graph::edgeless(1),
        ];
        let (l, r) = check_disjoint_union_law(&parts).unwrap();
        assert_eq!(l, rat(3, 2));
        assert_eq!(r, rat(3, 2));

        let (l, r) = check_disjoint_union_law(&[generators::complete(2), Graph::empty()]).unwrap();
        assert_eq!((l, r), (rat_int(1), rat_int(1)));

        assert!(check_disjoint_union_law(&[Graph::empty()]).is_err());
    }

    #[test]
    fn join_law_examples() {
        let g = generators::cycle(5).unwrap();
        let (l, r) = check_join_law(&g, &Graph::empty());
        assert_eq!(l, r);
        assert_eq!(l, rat_int(1));

        let k1 = generators::complete(1);
        assert_eq!(check_join_law(&k1, &k1), (rat_int(1), rat_int(1)));

        let c4 = generators::cycle(4).unwrap();
        let (l, r) = check_join_law(&c4, &c4);
        assert_eq!((l, r), (rat_int(3), rat_int(3)));
    }

    #[test]
    fn iterated_join_examples() {
        let k1 = generators::complete(1);
        for n in 1..=6 {
            let parts = vec![k1.clone(); n];
            let (l, r) = check_iterated_join_law(&parts).unwrap();
            assert_eq!(l, rat_int(n as i64 - 1));
            assert_eq!(l, r);
        }
        // octahedron K_{2,2,2}
        let two = Graph::edgeless(2);
        let (l, r) = check_iterated_join_law(&[two.clone(), two.clone(), two]).unwrap();
        assert_eq!((l, r), (rat_int(2), rat_int(2)));
        // wheel over C_4
        let (l, r) =
            check_iterated_join_law(&[generators::cycle(4).unwrap(), generators::complete(1)])
                .unwrap();
        assert_eq!((l, r), (rat_int(2), rat_int(2)));

        assert!(check_iterated_join_law(&[]).is_err());
    }

    #[test]
    fn vertex_dim_equals_ball_dim() {
        let g = generators::double_clique_matching(3).unwrap();
        for v in 0..g.order() {
            assert_eq!(vertex_dim(&g, v).unwrap(), dim(&g.unit_ball(v).unwrap()));
        }
    }

    #[test]
    fn triangle_free_without_isolated_vertices_is_one_dimensional() {
        let g = generators::cycle(7).unwrap();
        assert_eq!(dim(&g), rat_int(1));
        let star = generators::star_clique(2, 8).unwrap();
        assert_eq!(dim(&star), rat_int(1));
    }
}

//! Maximal clique enumeration (Bron–Kerbosch with pivoting) and the clique
//! statistics omega, gamma, and purity.

use crate::error::{GraphError, Result};
use crate::graph::{cmp_by_members, Graph, VertexSet};

pub const DEFAULT_CLIQUE_LIMIT: usize = 1_000_000;

/// All inclusion-maximal cliques, each listed once, in lexicographic order of
/// their sorted member lists. Isolated vertices appear as order-1 cliques.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn maximal_cliques_with_limit(g: &Graph, limit: usize) -> Result<Vec<VertexSet>> {
    if g.is_graph_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let r = VertexSet::with_capacity(g.order());
    let p = g.full_vertex_set();
    let x = VertexSet::with_capacity(g.order());
    expand(g, &r, p, x, limit, &mut out)?;
    out.sort_by(cmp_by_members);
    Ok(out)
}

fn expand(
    g: &Graph,
    r: &VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    limit: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if p.is_empty() && x.is_empty() {
        if out.len() >= limit {
            return Err(GraphError::ResourceLimit {
                what: "maximal clique count",
                limit: limit as u64,
            });
        }
        out.push(r.clone());
        return Ok(());
    }
    // pivot: vertex of P ∪ X with the most neighbors in P, ties to smallest id
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u).intersection(&p).len(), std::cmp::Reverse(u)))
        .expect("P or X nonempty");
    let ext = p.difference(g.neighbors(pivot));
    for v in ext.iter() {
        let mut r2 = r.clone();
        r2.insert(v);
        expand(
            g,
            &r2,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            limit,
            out,
        )?;
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// omega: order of the largest maximal clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.is_graph_empty() {
        return Err(GraphError::EmptyGraph);
    }
    Ok(maximal_cliques(g)?
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap())
}

/// gamma: order of the smallest maximal clique.
pub fn min_clique_number(g: &Graph) -> Result<usize> {
    if g.is_graph_empty() {
        return Err(GraphError::EmptyGraph);
    }
    Ok(maximal_cliques(g)?
        .iter()
        .map(VertexSet::len)
        .min()
        .unwrap())
}

/// A graph is pure iff all maximal cliques have the same order.
pub fn is_pure(g: &Graph) -> Result<bool> {
    Ok(clique_number(g)? == min_clique_number(g)?)
}

/// Checks that `s` induces a complete subgraph of `g`.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let members = s.members();
    members
        .iter()
        .all(|&u| u < g.order() && members.iter().all(|&v| u == v || g.has_edge(u, v)))
}

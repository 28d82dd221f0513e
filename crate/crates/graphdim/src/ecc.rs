//! Exact minimum edge clique cover via branch-and-bound set cover over edges.
//!
//! The candidate pool is the maximal cliques: any clique in an optimal cover
//! extends to a maximal one covering a superset of edges, so restricting to
//! maximal cliques preserves optimality.

use crate::cliques::{is_clique, maximal_cliques};
use crate::error::{GraphError, Result};
use crate::graph::{cmp_by_members, Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// An edge clique cover: each member induces a complete subgraph and the
/// members' internal edges together cover every edge of the graph.
#[derive(Clone, Debug)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
    /// Set when the input had no edges; the cover is then empty.
    pub edgeless: bool,
}

impl CliqueCover {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }
}

/// Result of checking a claimed cover against a graph.
#[derive(Clone, Debug)]
pub struct CoverCheck {
    pub valid: bool,
    pub uncovered_edges: Vec<(usize, usize)>,
    /// Indices of cover members that do not induce complete subgraphs.
    pub non_clique_members: Vec<usize>,
}

/// Minimum edge clique cover with the default search budget.
pub fn min_edge_clique_cover(g: &Graph) -> Result<CliqueCover> {
    min_edge_clique_cover_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn min_edge_clique_cover_with_budget(g: &Graph, budget: u64) -> Result<CliqueCover> {
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(CliqueCover {
            cliques: Vec::new(),
            edgeless: true,
        });
    }
    // candidates covering at least one edge (drop isolated-vertex singletons)
    let candidates: Vec<VertexSet> = maximal_cliques(g)?
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let edge_index: std::collections::HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let m = edges.len();
    // per-candidate bitset over edge indices
    let masks: Vec<VertexSet> = candidates
        .iter()
        .map(|c| {
            let members = c.members();
            let mut mask = VertexSet::with_capacity(m);
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    mask.insert(edge_index[&(u, v)]);
                }
            }
            mask
        })
        .collect();
    let all_edges = VertexSet::from_members(m, 0..m);
    // candidates containing each edge
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, mask) in masks.iter().enumerate() {
        for e in mask.iter() {
            containing[e].push(ci);
        }
    }

    let mut search = Search {
        masks: &masks,
        containing: &containing,
        all_edges: &all_edges,
        best: greedy_cover(&masks, &all_edges),
        nodes: 0,
        budget,
    };
    search.recurse(&mut Vec::new(), VertexSet::with_capacity(m))?;

    let mut cliques: Vec<VertexSet> = search.best.iter().map(|&i| candidates[i].clone()).collect();
    cliques.sort_by(cmp_by_members);
    Ok(CliqueCover {
        cliques,
        edgeless: false,
    })
}

/// Most-uncovered-edges-first greedy cover, used as the initial incumbent.
fn greedy_cover(masks: &[VertexSet], all_edges: &VertexSet) -> Vec<usize> {
    let mut covered = VertexSet::with_capacity(all_edges.len());
    let mut chosen = Vec::new();
    while covered.len() < all_edges.len() {
        let uncovered = all_edges.difference(&covered);
        let best = (0..masks.len())
            .max_by_key(|&i| (masks[i].intersection(&uncovered).len(), std::cmp::Reverse(i)))
            .expect("maximal cliques cover all edges");
        chosen.push(best);
        covered = covered.union(&masks[best]);
    }
    chosen.sort_unstable();
    chosen
}

struct Search<'a> {
    masks: &'a [VertexSet],
    containing: &'a [Vec<usize>],
    all_edges: &'a VertexSet,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn recurse(&mut self, chosen: &mut Vec<usize>, covered: VertexSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::ResourceLimit {
                what: "branch-and-bound node",
                limit: self.budget,
            });
        }
        let uncovered = self.all_edges.difference(&covered);
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let remaining = uncovered.len();
        let max_gain = self
            .masks
            .iter()
            .map(|mask| mask.intersection(&uncovered).len())
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return Ok(()); // cannot happen for maximal-clique candidates
        }
        let lower = remaining.div_ceil(max_gain);
        if chosen.len() + lower >= self.best.len() {
            return Ok(());
        }
        // branch on the uncovered edge contained in the fewest candidates
        let edge = uncovered
            .iter()
            .min_by_key(|&e| (self.containing[e].len(), e))
            .unwrap();
        for &ci in &self.containing[edge] {
            chosen.push(ci);
            self.recurse(chosen, covered.union(&self.masks[ci]))?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Cover size only.
pub fn ecc_number(g: &Graph) -> Result<usize> {
    Ok(min_edge_clique_cover(g)?.size())
}

/// Checks every edge is covered and every member induces a complete subgraph.
pub fn verify_cover(g: &Graph, cover: &CliqueCover) -> Result<CoverCheck> {
    for c in &cover.cliques {
        if let Some(v) = c.iter().find(|&v| v >= g.order()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    let non_clique_members: Vec<usize> = cover
        .cliques
        .iter()
        .enumerate()
        .filter(|(_, c)| !is_clique(g, c))
        .map(|(i, _)| i)
        .collect();
    let uncovered_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            !cover
                .cliques
                .iter()
                .any(|c| c.contains(u) && c.contains(v))
        })
        .collect();
    Ok(CoverCheck {
        valid: uncovered_edges.is_empty() && non_clique_members.is_empty(),
        uncovered_edges,
        non_clique_members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Exhaustive minimum over all subsets of maximal cliques.
    pub fn brute_force_ecc_number(g: &Graph) -> usize {
        let edges = g.edges();
        if edges.is_empty() {
            return 0;
        }
        let candidates: Vec<VertexSet> = maximal_cliques(g)
            .unwrap()
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect();
        let k = candidates.len();
        assert!(k <= 25);
        let mut best = usize::MAX;
        for mask in 1u32..(1 << k) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let covered = edges.iter().all(|&(u, v)| {
                (0..k).any(|i| {
                    mask & (1 << i) != 0 && candidates[i].contains(u) && candidates[i].contains(v)
                })
            });
            if covered {
                best = size;
            }
        }
        best
    }

    #[test]
    fn complete_graph_is_one_clique() {
        let cover = min_edge_clique_cover(&generators::complete(6)).unwrap();
        assert_eq!(cover.size(), 1);
        assert_eq!(cover.cliques[0].members(), vec![0, 1, 2, 3, 4, 5]);
        assert!(verify_cover(&generators::complete(6), &cover).unwrap().valid);
    }

    #[test]
    fn triangle_free_needs_one_clique_per_edge() {
        let c4 = generators::cycle(4).unwrap();
        let cover = min_edge_clique_cover(&c4).unwrap();
        assert_eq!(cover.size(), 4);
        for n in [5, 6, 9] {
            let c = generators::cycle(n).unwrap();
            assert_eq!(ecc_number(&c).unwrap(), n);
        }
        assert_eq!(ecc_number(&generators::petersen()).unwrap(), 15);
    }

    #[test]
    fn bowtie_and_windmill() {
        let bowtie = generators::windmill(2).unwrap();
        assert_eq!(ecc_number(&bowtie).unwrap(), 2);
        assert_eq!(brute_force_ecc_number(&bowtie), 2);
        let w3 = generators::windmill(3).unwrap();
        assert_eq!(ecc_number(&w3).unwrap(), 3);
        assert_eq!(brute_force_ecc_number(&w3), 3);
    }

    #[test]
    fn edgeless_graph_gets_empty_flagged_cover() {
        let cover = min_edge_clique_cover(&Graph::edgeless(4)).unwrap();
        assert!(cover.edgeless);
        assert_eq!(cover.size(), 0);
    }

    #[test]
    fn verify_cover_reports_violations() {
        let c4 = generators::cycle(4).unwrap();
        let bad = CliqueCover {
            cliques: vec![
                VertexSet::from_members(4, [0, 1]),
                VertexSet::from_members(4, [2, 3]),
            ],
            edgeless: false,
        };
        let check = verify_cover(&c4, &bad).unwrap();
        assert!(!check.valid);
        assert_eq!(check.uncovered_edges, vec![(0, 3), (1, 2)]);

        let non_clique = CliqueCover {
            cliques: vec![VertexSet::from_members(4, [0, 1, 2, 3])],
            edgeless: false,
        };
        let check = verify_cover(&c4, &non_clique).unwrap();
        assert!(!check.valid);
        assert_eq!(check.non_clique_members, vec![0]);

        let k4 = generators::complete(4);
        let partial = CliqueCover {
            cliques: vec![VertexSet::from_members(4, [0, 1, 2])],
            edgeless: false,
        };
        let check = verify_cover(&k4, &partial).unwrap();
        assert_eq!(check.uncovered_edges, vec![(0, 3), (1, 3), (2, 3)]);

        let out_of_range = CliqueCover {
            cliques: vec![VertexSet::from_members(8, [0, 7])],
            edgeless: false,
        };
        assert!(verify_cover(&c4, &out_of_range).is_err());
    }

    #[test]
    fn matches_brute_force_on_random_small_graphs() {
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        let mut checked = 0;
        for n in 3..=8usize {
            for _ in 0..60 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if next() % 5 < 3 {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                if !g.is_connected() || g.edge_count() == 0 {
                    continue;
                }
                let cover = min_edge_clique_cover(&g).unwrap();
                assert!(verify_cover(&g, &cover).unwrap().valid);
                assert_eq!(cover.size(), brute_force_ecc_number(&g), "graph {g:?}");
                checked += 1;
            }
        }
        assert!(checked >= 200, "only {checked} instances exercised");
    }

    #[test]
    fn deterministic_output() {
        let g = generators::double_clique_matching(4).unwrap();
        let a = min_edge_clique_cover(&g).unwrap();
        let b = min_edge_clique_cover(&g).unwrap();
        let members = |c: &CliqueCover| c.cliques.iter().map(|s| s.members()).collect::<Vec<_>>();
        assert_eq!(members(&a), members(&b));
    }

    #[test]
    fn node_budget_is_enforced() {
        let g = generators::double_clique_matching(4).unwrap();
        assert!(matches!(
            min_edge_clique_cover_with_budget(&g, 2),
            Err(GraphError::ResourceLimit { .. })
        ));
    }
}

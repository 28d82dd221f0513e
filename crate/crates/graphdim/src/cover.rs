//! Vertex multiplicities of a clique cover, the dimension-from-cover identity,
//! the two-clique decomposition, the pure-graph law, and clique-number bounds.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cliques;
use crate::dim::{self, DimCache};
use crate::ecc::{self, CliqueCover};
use crate::error::{GraphError, Result};
use crate::graph::{Graph, VertexSet};
use crate::ratio::{rat_int, rat_usize, Rational};

/// For each nonempty subset T of cover indices, the number of vertices lying in
/// exactly the cliques indexed by T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureCounts {
    pub counts: BTreeMap<Vec<usize>, usize>,
    pub total: usize,
}

/// Multiplicities computed directly from per-vertex membership signatures.
pub fn signature_counts(g: &Graph, cover: &CliqueCover) -> Result<SignatureCounts> {
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut total = 0;
    for v in 0..g.order() {
        let signature: Vec<usize> = cover
            .cliques
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(v))
            .map(|(i, _)| i)
            .collect();
        if signature.is_empty() {
            return Err(GraphError::MalformedCover(format!(
                "vertex {v} lies in no cover clique"
            )));
        }
        *counts.entry(signature).or_insert(0) += 1;
        total += 1;
    }
    Ok(SignatureCounts { counts, total })
}

/// The same multiplicities via the alternating-sum expansion over superset
/// intersections; kept as an independent cross-check of `signature_counts`.
pub fn signature_counts_inclusion_exclusion(
    g: &Graph,
    cover: &CliqueCover,
) -> Result<SignatureCounts> {
    let m = cover.cliques.len();
    if m > 30 {
        return Err(GraphError::ResourceLimit {
            what: "cover size for inclusion-exclusion",
            limit: 30,
        });
    }
    for c in &cover.cliques {
        if let Some(v) = c.iter().find(|&v| v >= g.order()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    // |∩_{i∈S} V_i| for every nonempty S
    let mut inter_size = vec![0usize; 1 << m];
    let mut inter_set: Vec<Option<VertexSet>> = vec![None; 1 << m];
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let set = if rest == 0 {
            cover.cliques[low].clone()
        } else {
            inter_set[rest]
                .as_ref()
                .unwrap()
                .intersection(&cover.cliques[low])
        };
        inter_size[mask] = set.len();
        inter_set[mask] = Some(set);
    }
    let mut counts = BTreeMap::new();
    let mut total = 0;
    for t in 1usize..(1 << m) {
        // ||K_T|| = Σ_{S ⊇ T} (-1)^{|S\T|} |∩_{i∈S} V_i|
        let free = !t & ((1 << m) - 1);
        let mut acc: i64 = 0;
        let mut extra = free;
        loop {
            let s = t | extra;
            let sign = if (s.count_ones() - t.count_ones()) % 2 == 0 {
                1
            } else {
                -1
            };
            acc += sign * inter_size[s] as i64;
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & free;
        }
        if acc < 0 {
            return Err(GraphError::MalformedCover(
                "negative multiplicity from inclusion-exclusion".into(),
            ));
        }
        if acc > 0 {
            let indices: Vec<usize> = (0..m).filter(|i| t & (1 << i) != 0).collect();
            counts.insert(indices, acc as usize);
            total += acc as usize;
        }
    }
    Ok(SignatureCounts { counts, total })
}

/// Evaluates the cover-side of the dimension identity and returns it as a
/// dimension: the multiplicity-weighted sum of induced-union dimensions over
/// all proper nonempty index subsets, divided by |G| - |K_L|.
///
/// This is a verification route, not a faster algorithm: the induced-union
/// dimensions are themselves computed by the dimension engine.
pub fn dim_via_cover(g: &Graph, cover: &CliqueCover) -> Result<Rational> {
    let mut cache = DimCache::new();
    dim_via_cover_with_cache(g, cover, &mut cache)
}

pub fn dim_via_cover_with_cache(
    g: &Graph,
    cover: &CliqueCover,
    cache: &mut DimCache,
) -> Result<Rational> {
    let m = cover.cliques.len();
    if m == 0 {
        return Err(GraphError::MalformedCover("empty cover".into()));
    }
    if m == 1 {
        return Ok(rat_int(cover.cliques[0].len() as i64 - 1));
    }
    let (numerator, denominator) = cover_identity_sides_inner(g, cover, cache)?;
    if denominator.is_zero() {
        return Err(GraphError::MalformedCover(
            "all vertices lie in every clique; cover is not minimal".into(),
        ));
    }
    Ok(numerator / denominator)
}

/// Both sides of the cover identity: lhs = (|G| - |K_L|) * dim G, rhs = the
/// multiplicity-weighted sum of induced-union dimensions over proper nonempty
/// index subsets.
pub fn cover_identity_sides(g: &Graph, cover: &CliqueCover) -> Result<(Rational, Rational)> {
    let mut cache = DimCache::new();
    let m = cover.cliques.len();
    if m == 0 {
        return Err(GraphError::MalformedCover("empty cover".into()));
    }
    if m == 1 {
        // dim G = |V_1| - 1 when one clique covers everything
        let lhs = rat_usize(g.order()) * dim::dim_subset(g, &g.full_vertex_set(), &mut cache);
        let rhs = rat_usize(g.order()) * rat_int(cover.cliques[0].len() as i64 - 1);
        return Ok((lhs, rhs));
    }
    let (rhs, scale) = cover_identity_sides_inner(g, cover, &mut cache)?;
    let lhs = scale * dim::dim_subset(g, &g.full_vertex_set(), &mut cache);
    Ok((lhs, rhs))
}

fn cover_identity_sides_inner(
    g: &Graph,
    cover: &CliqueCover,
    cache: &mut DimCache,
) -> Result<(Rational, Rational)> {
    let m = cover.cliques.len();
    let counts = signature_counts(g, cover)?;
    let mut common = cover.cliques[0].clone();
    for c in &cover.cliques[1..] {
        common = common.intersection(c);
    }
    let denom = rat_int(g.order() as i64 - common.len() as i64);
    let full: Vec<usize> = (0..m).collect();
    let mut rhs = Rational::zero();
    for (signature, &count) in &counts.counts {
        if *signature == full {
            continue; // proper subsets only; the full intersection is K_L
        }
        let union = signature
            .iter()
            .fold(VertexSet::with_capacity(g.order()), |acc, &i| {
                acc.union(&cover.cliques[i])
            });
        rhs += rat_usize(count) * dim::dim_subset(g, &union, cache);
    }
    Ok((rhs, denom))
}

/// Minimum cover augmented with a singleton per isolated vertex, so every
/// vertex carries a signature.
pub fn augmented_min_cover(g: &Graph) -> Result<CliqueCover> {
    augmented_min_cover_with_budget(g, ecc::DEFAULT_NODE_BUDGET)
}

pub fn augmented_min_cover_with_budget(g: &Graph, budget: u64) -> Result<CliqueCover> {
    let mut cover = ecc::min_edge_clique_cover_with_budget(g, budget)?;
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            cover.cliques.push(VertexSet::from_members(g.order(), [v]));
        }
    }
    Ok(cover)
}

/// Lemma check for covers of size two:
/// lhs = (|G| - |K_{V1 V2}|) * dim G, rhs = ||K_{V1}|| (|V1|-1) + ||K_{V2}|| (|V2|-1).
pub fn check_two_clique_lemma(g: &Graph) -> Result<(Rational, Rational)> {
    let cover = augmented_min_cover(g)?;
    if cover.cliques.len() != 2 {
        return Err(GraphError::Precondition(format!(
            "clique cover number is {}, not 2",
            cover.cliques.len()
        )));
    }
    let counts = signature_counts(g, &cover)?;
    let inter = cover.cliques[0].intersection(&cover.cliques[1]);
    let lhs = rat_int(g.order() as i64 - inter.len() as i64) * dim::dim(g);
    let mult = |i: usize| rat_usize(counts.counts.get(&vec![i]).copied().unwrap_or(0));
    let rhs = mult(0) * rat_int(cover.cliques[0].len() as i64 - 1)
        + mult(1) * rat_int(cover.cliques[1].len() as i64 - 1);
    Ok((lhs, rhs))
}

/// Result of the pure-graph law check.
#[derive(Clone, Debug)]
pub struct PureCheck {
    pub dim: Rational,
    pub expected: Rational,
    pub vertex_dims_ok: bool,
}

/// For a pure graph with maximal clique order N and no isolated vertices,
/// dim G = N - 1 and every vertex dimension equals N - 1.
pub fn check_pure_corollary(g: &Graph) -> Result<PureCheck> {
    if g.is_graph_empty() {
        return Err(GraphError::EmptyGraph);
    }
    if !cliques::is_pure(g)? {
        return Err(GraphError::Precondition("graph is not pure".into()));
    }
    if g.min_degree() == 0 && cliques::clique_number(g)? > 1 {
        return Err(GraphError::Precondition(
            "isolated vertices are excluded from the pure-graph law".into(),
        ));
    }
    let order = cliques::clique_number(g)?;
    let expected = rat_int(order as i64 - 1);
    let report = dim::dim_spectrum(g);
    let vertex_dims_ok = report.vertex_dims.iter().all(|d| *d == expected);
    Ok(PureCheck {
        dim: report.graph_dim,
        expected,
        vertex_dims_ok,
    })
}

/// Clique-number bounds on the dimension.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub omega: usize,
    pub gamma: usize,
    pub lower_basic: Rational,
    /// Improved lower bound; present iff the graph is connected.
    pub lower_connected: Option<Rational>,
    pub upper: Rational,
    pub dim: Rational,
    pub saturated_lower: bool,
    pub saturated_upper: bool,
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    if g.is_graph_empty() {
        return Err(GraphError::EmptyGraph);
    }
    let omega = cliques::clique_number(g)?;
    let gamma = cliques::min_clique_number(g)?;
    let k = rat_usize(omega);
    let n = rat_usize(g.order());
    let lower_basic = k.clone() * (k.clone() - Rational::one()) / n.clone();
    let upper = k.clone() - Rational::one();
    let lower_connected = if g.is_connected() {
        let k2 = k.clone() * k.clone();
        Some(
            Rational::one()
                + k2 * (k.clone() - Rational::one()) * (k.clone() - rat_int(2))
                    / (n.clone() * (k.clone() * (k - rat_int(2)) + n)),
        )
    } else {
        None
    };
    let d = dim::dim(g);
    let saturated_lower = match &lower_connected {
        Some(lc) => d == *lc,
        None => d == lower_basic,
    };
    let saturated_upper = d == upper;
    Ok(BoundsReport {
        omega,
        gamma,
        lower_basic,
        lower_connected,
        upper,
        dim: d,
        saturated_lower,
        saturated_upper,
    })
}

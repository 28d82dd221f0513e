//! The full verification suite: every law and construction check, runnable
//! from the CLI (`suite`) and from the acceptance test target.
//!
//! All equality checks are exact rational comparisons.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cliques::maximal_cliques;
use crate::cover;
use crate::dim;
use crate::ecc;
use crate::generators;
use crate::graph::Graph;
use crate::ratio::{rat, rat_int, Rational};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest order for the random connected-graph corpus.
    pub max_n: usize,
    /// Connected random graphs sampled for the cover-formula and bounds checks.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 8,
            samples: 500,
            seed: 20240817,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn rng_for(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(salt.wrapping_mul(0x9E3779B97F4A7C15)))
}

fn random_probability(rng: &mut ChaCha8Rng) -> Rational {
    const CHOICES: [(i64, i64); 4] = [(1, 4), (1, 3), (1, 2), (2, 3)];
    let (n, d) = CHOICES[rng.gen_range(0..CHOICES.len())];
    rat(n, d)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = random_probability(rng);
    generators::erdos_renyi(n, &p, rng.gen()).expect("valid parameters")
}

/// Connected random graph with min degree >= 1 on 2..=max_n vertices.
fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let g = random_graph(rng, n);
        if g.is_connected() && g.min_degree() >= 1 {
            return g;
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteSummary {
    let mut checks = Vec::new();
    let mut corpus: Vec<Graph> = Vec::new();

    checks.push(base_values(cfg, &mut corpus));
    checks.push(join_law(cfg, &mut corpus));
    checks.push(disjoint_union_law(cfg, &mut corpus));
    checks.push(ball_sphere_identity(&corpus));

    let connected = connected_corpus(cfg);
    checks.push(cover_formula_identity(&connected));
    checks.push(pure_graph_law(cfg));
    checks.push(uniform_constructions());
    checks.push(dimension_bounds(&connected));
    checks.push(ecc_optimality(cfg, &connected));
    checks.push(oracle_equivalence_and_invariance(cfg));
    checks.push(performance_smoke(cfg));

    let passed = checks.iter().all(|c| c.passed);
    SuiteSummary { passed, checks }
}

/// Known dimensions: empty, edgeless, complete, cycles, random trees.
pub fn base_values(cfg: &SuiteConfig, corpus: &mut Vec<Graph>) -> Check {
    let mut failures = Vec::new();
    let mut push = |g: Graph, expected: Rational, what: String, failures: &mut Vec<String>| {
        if dim::dim(&g) != expected {
            failures.push(format!("{what}: dim {} != {expected}", dim::dim(&g)));
        }
        corpus.push(g);
    };

    if dim::dim(&Graph::empty()) != rat_int(-1) {
        failures.push("empty graph: dim != -1".into());
    }
    for n in 1..=10 {
        push(
            Graph::edgeless(n),
            rat_int(0),
            format!("edgeless_{n}"),
            &mut failures,
        );
    }
    for n in 1..=8 {
        push(
            generators::complete(n),
            rat_int(n as i64 - 1),
            format!("K_{n}"),
            &mut failures,
        );
    }
    push(
        generators::cycle(3).unwrap(),
        rat_int(2),
        "C_3".into(),
        &mut failures,
    );
    for n in 4..=12 {
        push(
            generators::cycle(n).unwrap(),
            rat_int(1),
            format!("C_{n}"),
            &mut failures,
        );
    }
    let mut rng = rng_for(cfg, 1);
    for i in 0..50 {
        let n = rng.gen_range(2..=20);
        push(
            generators::random_tree(n, rng.gen()),
            rat_int(1),
            format!("tree_{i}"),
            &mut failures,
        );
    }
    summarize(
        "base-values",
        failures,
        "empty, edgeless, complete, cycle, and tree dimensions verified",
    )
}

/// dim(G1 + G2) = 1 + dim G1 + dim G2, plus the iterated-join corollary.
pub fn join_law(cfg: &SuiteConfig, corpus: &mut Vec<Graph>) -> Check {
    let mut rng = rng_for(cfg, 2);
    let mut failures = Vec::new();
    let pairs = 200;
    for i in 0..pairs {
        let n1 = rng.gen_range(1..=7);
        let n2 = rng.gen_range(1..=(14 - n1).min(7));
        let g1 = random_graph(&mut rng, n1);
        let g2 = random_graph(&mut rng, n2);
        let (lhs, rhs) = dim::check_join_law(&g1, &g2);
        if lhs != rhs {
            failures.push(format!("pair {i}: {lhs} != {rhs}"));
        }
        corpus.push(g1.join(&g2));
    }
    let triples = 50;
    for i in 0..triples {
        let n1 = rng.gen_range(1..=5);
        let n2 = rng.gen_range(1..=5);
        let n3 = rng.gen_range(1..=(13 - n1 - n2).min(5));
        let parts = vec![
            random_graph(&mut rng, n1),
            random_graph(&mut rng, n2),
            random_graph(&mut rng, n3),
        ];
        let (lhs, rhs) = dim::check_iterated_join_law(&parts).expect("nonempty list");
        if lhs != rhs {
            failures.push(format!("triple {i}: {lhs} != {rhs}"));
        }
        let mut whole = parts[0].clone();
        for p in &parts[1..] {
            whole = whole.join(p);
        }
        corpus.push(whole);
    }
    summarize(
        "join-law",
        failures,
        format!("{pairs} pairs and {triples} triples verified"),
    )
}

/// dim of a disjoint union equals the order-weighted average of part dims.
pub fn disjoint_union_law(cfg: &SuiteConfig, corpus: &mut Vec<Graph>) -> Check {
    let mut rng = rng_for(cfg, 3);
    let mut failures = Vec::new();
    let instances = 200;
    for i in 0..instances {
        let count = rng.gen_range(2..=4);
        let mut parts = Vec::new();
        let mut budget = 16usize;
        for _ in 0..count {
            let n = rng.gen_range(1..=budget.saturating_sub(count).max(1).min(6));
            budget -= n;
            parts.push(random_graph(&mut rng, n));
        }
        let (lhs, rhs) = dim::check_disjoint_union_law(&parts).expect("nonempty parts");
        if lhs != rhs {
            failures.push(format!("instance {i}: {lhs} != {rhs}"));
        }
        let mut whole = Graph::empty();
        for p in &parts {
            whole = whole.disjoint_union(p);
        }
        corpus.push(whole);
    }
    summarize(
        "disjoint-union-law",
        failures,
        format!("{instances} multi-component graphs verified"),
    )
}

/// vertex_dim(G, v) = dim(unit_ball(G, v)) for every vertex of every corpus graph.
pub fn ball_sphere_identity(corpus: &[Graph]) -> Check {
    let mut failures = Vec::new();
    let mut vertices = 0usize;
    for (gi, g) in corpus.iter().enumerate() {
        let mut cache = dim::DimCache::new();
        for v in 0..g.order() {
            vertices += 1;
            let direct = dim::vertex_dim_cached(g, v, &mut cache).expect("vertex in range");
            let ball = dim::dim(&g.unit_ball(v).unwrap());
            if direct != ball {
                failures.push(format!("graph {gi} vertex {v}: {direct} != {ball}"));
            }
        }
    }
    summarize(
        "ball-sphere-identity",
        failures,
        format!("{vertices} vertices across {} graphs verified", corpus.len()),
    )
}

/// The shared connected min-degree-1 random corpus for the cover-formula,
/// bounds, and solver-optimality checks.
pub fn connected_corpus(cfg: &SuiteConfig) -> Vec<Graph> {
    let mut rng = rng_for(cfg, 4);
    (0..cfg.samples)
        .map(|_| random_connected_graph(&mut rng, cfg.max_n))
        .collect()
}

/// (|G| - |K_L|) dim G equals the multiplicity-weighted sum of induced-union
/// dimensions, using the solver's minimum cover.
pub fn cover_formula_identity(connected: &[Graph]) -> Check {
    let mut failures = Vec::new();
    for (i, g) in connected.iter().enumerate() {
        match cover::augmented_min_cover(g)
            .and_then(|c| cover::cover_identity_sides(g, &c))
        {
            Ok((lhs, rhs)) => {
                if lhs != rhs {
                    failures.push(format!("graph {i}: {lhs} != {rhs}"));
                }
            }
            Err(e) => failures.push(format!("graph {i}: {e}")),
        }
    }
    summarize(
        "cover-formula-identity",
        failures,
        format!("{} connected graphs verified", connected.len()),
    )
}

/// Pure graphs with maximal clique order N have dim N-1 at every vertex.
pub fn pure_graph_law(cfg: &SuiteConfig) -> Check {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut rng = rng_for(cfg, 5);
    for clique_order in 2..=4usize {
        // reachable orders: blocks beyond the first add 2..=N fresh vertices
        let orders: Vec<usize> = (clique_order..=14)
            .filter(|&n| {
                let extra = n - clique_order;
                if clique_order == 2 {
                    extra % 2 == 0
                } else {
                    extra == 0 || extra >= 2
                }
            })
            .collect();
        for &n in &orders {
            for _ in 0..4 {
                let g = match generators::pure_glued(n, clique_order, rng.gen()) {
                    Ok(g) => g,
                    Err(e) => {
                        failures.push(format!("pure_glued({n}, {clique_order}): {e}"));
                        continue;
                    }
                };
                count += 1;
                match cover::check_pure_corollary(&g) {
                    Ok(c) => {
                        if c.dim != c.expected || !c.vertex_dims_ok {
                            failures.push(format!(
                                "pure_glued({n}, {clique_order}): dim {} expected {}",
                                c.dim, c.expected
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("pure_glued({n}, {clique_order}): {e}")),
                }
            }
        }
    }
    for t in 1..=5 {
        let g = generators::windmill(t).unwrap();
        if dim::dim(&g) != rat_int(2) {
            failures.push(format!("windmill({t}): dim {}", dim::dim(&g)));
        }
    }
    if count < 100 {
        failures.push(format!("only {count} pure graphs generated"));
    }
    summarize(
        "pure-graph-law",
        failures,
        format!("{count} pure graphs plus 5 windmills verified"),
    )
}

/// The two uniform-but-not-pure constructions.
pub fn uniform_constructions() -> Check {
    let mut failures = Vec::new();

    let g = generators::double_clique_matching(4).unwrap();
    let r = dim::dim_spectrum(&g);
    if !r.vertex_dims.iter().all(|d| *d == rat(5, 2)) {
        failures.push("double_clique_matching(4): vertex dims != 5/2".into());
    }
    if !r.is_uniform || r.is_pure {
        failures.push("double_clique_matching(4): expected uniform and not pure".into());
    }

    let g = generators::inflated_cube();
    let r = dim::dim_spectrum(&g);
    if !r.vertex_dims.iter().all(|d| *d == rat_int(2)) {
        failures.push("inflated_cube: vertex dims != 2".into());
    }
    if !r.is_uniform || r.is_pure {
        failures.push("inflated_cube: expected uniform and not pure".into());
    }
    if r.omega != 4 || r.gamma != 2 {
        failures.push(format!(
            "inflated_cube: omega {} gamma {} (expected 4 and 2)",
            r.omega, r.gamma
        ));
    }

    summarize(
        "uniform-constructions",
        failures,
        "both uniform non-pure families verified",
    )
}

/// Clique-number bounds plus the three saturation witnesses.
pub fn dimension_bounds(connected: &[Graph]) -> Check {
    let mut failures = Vec::new();
    for (i, g) in connected.iter().enumerate() {
        let b = match cover::bounds_report(g) {
            Ok(b) => b,
            Err(e) => {
                failures.push(format!("graph {i}: {e}"));
                continue;
            }
        };
        if b.lower_basic > b.dim || b.dim > b.upper {
            failures.push(format!("graph {i}: basic bounds violated"));
        }
        if let Some(lc) = &b.lower_connected {
            if b.omega >= 2 && *lc > b.dim {
                failures.push(format!("graph {i}: connected lower bound violated"));
            }
        }
        // gamma - 1 <= dim <= omega - 1 on connected graphs
        if rat_int(b.gamma as i64 - 1) > b.dim {
            failures.push(format!("graph {i}: gamma lower bound violated"));
        }
    }

    let witness = generators::complete(4).disjoint_union(&Graph::edgeless(4));
    let b = cover::bounds_report(&witness).unwrap();
    if !(b.lower_basic == rat(3, 2) && b.dim == rat(3, 2) && b.saturated_lower) {
        failures.push("union(K_4, 4 isolated) does not saturate the basic lower bound".into());
    }
    let b = cover::bounds_report(&generators::star_clique(4, 12).unwrap()).unwrap();
    if !(b.lower_connected == Some(rat(7, 5)) && b.dim == rat(7, 5) && b.saturated_lower) {
        failures.push("star_clique(4, 12) does not saturate the connected lower bound".into());
    }
    for n in 2..=7 {
        let b = cover::bounds_report(&generators::complete(n)).unwrap();
        if !b.saturated_upper {
            failures.push(format!("K_{n} does not saturate the upper bound"));
        }
    }
    summarize(
        "dimension-bounds",
        failures,
        format!(
            "{} connected graphs plus saturation witnesses verified",
            connected.len()
        ),
    )
}

/// Exhaustive minimum over subsets of maximal cliques; independent of the
/// branch-and-bound search path.
fn brute_force_ecc_number(g: &Graph) -> Option<usize> {
    let edges = g.edges();
    if edges.is_empty() {
        return Some(0);
    }
    let candidates: Vec<_> = maximal_cliques(g)
        .ok()?
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let k = candidates.len();
    if k > 22 {
        return None;
    }
    let mut best = usize::MAX;
    for mask in 1u32..(1u32 << k) {
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
    Some(best)
}

/// Solver theta_e equals the exhaustive minimum on small graphs.
pub fn ecc_optimality(cfg: &SuiteConfig, connected: &[Graph]) -> Check {
    let mut failures = Vec::new();
    let mut instances: Vec<Graph> = connected
        .iter()
        .filter(|g| g.order() <= 7)
        .cloned()
        .collect();
    let mut rng = rng_for(cfg, 6);
    while instances.len() < 300 {
        instances.push(random_connected_graph(&mut rng, 7));
    }
    let mut verified = 0;
    for (i, g) in instances.iter().enumerate() {
        let cover = match ecc::min_edge_clique_cover(g) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("graph {i}: {e}"));
                continue;
            }
        };
        match ecc::verify_cover(g, &cover) {
            Ok(c) if c.valid => {}
            _ => failures.push(format!("graph {i}: returned cover invalid")),
        }
        match brute_force_ecc_number(g) {
            Some(best) => {
                if cover.size() != best {
                    failures.push(format!(
                        "graph {i}: solver {} != brute force {best}",
                        cover.size()
                    ));
                }
                verified += 1;
            }
            None => failures.push(format!("graph {i}: brute force skipped")),
        }
    }
    // triangle-free spot checks: theta_e = |E|
    for n in [4, 5, 8, 12] {
        let c = generators::cycle(n).unwrap();
        if ecc::ecc_number(&c).unwrap() != n {
            failures.push(format!("C_{n}: theta_e != {n}"));
        }
    }
    if ecc::ecc_number(&generators::petersen()).unwrap() != 15 {
        failures.push("Petersen: theta_e != 15".into());
    }
    summarize(
        "ecc-optimality",
        failures,
        format!("{verified} instances matched the exhaustive oracle"),
    )
}

/// Memoized dim equals the direct recursion, and dim is invariant under
/// random vertex relabelings.
pub fn oracle_equivalence_and_invariance(cfg: &SuiteConfig) -> Check {
    let mut rng = rng_for(cfg, 7);
    let mut failures = Vec::new();
    let instances = 300;
    for i in 0..instances {
        let n = rng.gen_range(1..=9);
        let g = random_graph(&mut rng, n);
        let memoized = dim::dim(&g);
        if memoized != dim::dim_unmemoized(&g) {
            failures.push(format!("graph {i}: memoized != direct recursion"));
        }
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..n).collect();
            for j in (1..n).rev() {
                perm.swap(j, rng.gen_range(0..=j));
            }
            let relabeled = g.relabel(&perm).expect("valid permutation");
            if dim::dim(&relabeled) != memoized {
                failures.push(format!("graph {i}: dim changed under relabeling"));
            }
        }
    }
    summarize(
        "oracle-equivalence-invariance",
        failures,
        format!("{instances} graphs, 5 relabelings each, verified"),
    )
}

/// Memoized dim of G(25, 1/4) must finish within 30 seconds. The direct
/// recursion is skipped above 12 vertices (it is super-exponential there).
pub fn performance_smoke(cfg: &SuiteConfig) -> Check {
    let g = generators::erdos_renyi(25, &rat(1, 4), cfg.seed).expect("valid parameters");
    let start = Instant::now();
    let d = dim::dim(&g);
    let elapsed = start.elapsed();
    let passed = elapsed.as_secs_f64() <= 30.0;
    check(
        "performance-smoke",
        passed,
        format!(
            "dim(G(25, 1/4)) = {d} in {:.2}s (budget 30s); direct recursion skipped for n > 12",
            elapsed.as_secs_f64()
        ),
    )
}

fn summarize(name: &str, failures: Vec<String>, ok_detail: impl Into<String>) -> Check {
    if failures.is_empty() {
        check(name, true, ok_detail.into())
    } else {
        let shown = failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
        check(
            name,
            false,
            format!("{} failures: {shown}", failures.len()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // the full suite runs in the acceptance test target; keep a tiny
    // configuration here so unit runs stay fast
    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            max_n: 6,
            samples: 20,
            seed: 7,
        };
        let connected = connected_corpus(&cfg);
        assert_eq!(connected.len(), 20);
        let c = cover_formula_identity(&connected);
        assert!(c.passed, "{}", c.detail);
        let c = dimension_bounds(&connected);
        assert!(c.passed, "{}", c.detail);
    }

    #[test]
    fn brute_force_ecc_matches_known_values() {
        assert_eq!(brute_force_ecc_number(&generators::complete(5)), Some(1));
        assert_eq!(
            brute_force_ecc_number(&generators::windmill(3).unwrap()),
            Some(3)
        );
        assert_eq!(brute_force_ecc_number(&Graph::edgeless(3)), Some(0));
    }
}

//! Deterministic graph constructors: the named example families plus seeded
//! random graphs for the property suites.
//!
//! Random families use ChaCha8 seeded from the caller's 64-bit seed, so the
//! same spec yields the same graph on every platform. Regression values pinned
//! in tests depend on that generator staying fixed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliques;
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::ratio::Rational;

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid complete graph")
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(GraphError::InvalidParams(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path on n vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// The Petersen graph.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer C_5
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    Graph::from_edges(10, &edges).expect("valid Petersen graph")
}

/// Star graph with the center replaced by a K_k core; the n - k leaves are
/// attached round-robin so core degrees stay within one of each other.
pub fn star_clique(k: usize, n: usize) -> Result<Graph> {
    if k < 2 || k > n {
        return Err(GraphError::InvalidParams(format!(
            "star_clique needs 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    for (i, leaf) in (k..n).enumerate() {
        edges.push((i % k, leaf));
    }
    Graph::from_edges(n, &edges)
}

/// Cube with each vertex inflated to a K_4; each cube edge becomes a perfect
/// matching joining same-indexed vertices of the two blocks. 32 vertices;
/// every unit sphere is a triangle plus three isolated vertices.
pub fn inflated_cube() -> Graph {
    let mut edges = Vec::new();
    for block in 0..8usize {
        let base = 4 * block;
        for i in 0..4 {
            for j in (i + 1)..4 {
                edges.push((base + i, base + j));
            }
        }
    }
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                for i in 0..4 {
                    edges.push((4 * a + i, 4 * b + i));
                }
            }
        }
    }
    Graph::from_edges(32, &edges).expect("valid inflated cube")
}

/// Two K_c blocks joined by a perfect matching; every sphere is the disjoint
/// union of K_{c-1} and a single vertex.
pub fn double_clique_matching(c: usize) -> Result<Graph> {
    if c < 2 {
        return Err(GraphError::InvalidParams(format!(
            "double_clique_matching needs c >= 2, got {c}"
        )));
    }
    let mut edges = Vec::new();
    for block in 0..2 {
        let base = c * block;
        for i in 0..c {
            for j in (i + 1)..c {
                edges.push((base + i, base + j));
            }
        }
    }
    for i in 0..c {
        edges.push((i, c + i));
    }
    Graph::from_edges(2 * c, &edges)
}

/// t triangles sharing one common vertex (vertex 0); 2t + 1 vertices.
pub fn windmill(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(GraphError::InvalidParams("windmill needs t >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..t {
        let a = 1 + 2 * i;
        let b = 2 + 2 * i;
        edges.push((0, a));
        edges.push((0, b));
        edges.push((a, b));
    }
    Graph::from_edges(2 * t + 1, &edges)
}

const PURE_GLUED_ATTEMPTS: usize = 400;

/// Random pure graph on exactly `n` vertices whose maximal cliques all have
/// order `clique_order`, built by gluing fresh K_N blocks onto sub-cliques of
/// existing blocks (sharing at most N - 2 vertices). The output is certified
/// pure before being returned.
pub fn pure_glued(n: usize, clique_order: usize, seed: u64) -> Result<Graph> {
    let big_n = clique_order;
    if big_n < 2 || n < big_n {
        return Err(GraphError::InvalidParams(format!(
            "pure_glued needs n >= N >= 2, got n={n}, N={big_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PURE_GLUED_ATTEMPTS {
        if let Some(g) = pure_glued_attempt(n, big_n, &mut rng) {
            if cliques::is_pure(&g)? && cliques::clique_number(&g)? == big_n {
                return Ok(g);
            }
        }
    }
    Err(GraphError::ResourceLimit {
        what: "pure_glued rejection attempts",
        limit: PURE_GLUED_ATTEMPTS as u64,
    })
}

fn pure_glued_attempt(n: usize, big_n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    // blocks[i] lists the members of the i-th K_N block
    let mut blocks: Vec<Vec<usize>> = vec![(0..big_n).collect()];
    let mut used = big_n;
    while used < n {
        let remaining = n - used;
        // a fresh block shares s <= N - 2 old vertices and adds N - s new ones
        let choices: Vec<usize> = (2..=big_n)
            .filter(|&fresh| fresh <= remaining && remaining - fresh != 1)
            .collect();
        if choices.is_empty() {
            return None;
        }
        let fresh = choices[rng.gen_range(0..choices.len())];
        let shared = big_n - fresh;
        let host = &blocks[rng.gen_range(0..blocks.len())];
        let mut pool = host.clone();
        let mut members: Vec<usize> = Vec::with_capacity(big_n);
        for _ in 0..shared {
            members.push(pool.swap_remove(rng.gen_range(0..pool.len())));
        }
        members.extend(used..used + fresh);
        used += fresh;
        blocks.push(members);
    }
    let mut edges = Vec::new();
    for block in &blocks {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).ok()
}

/// Erdős–Rényi G(n, p) with an exact rational edge probability and a pinned
/// ChaCha8 draw sequence, so the same (n, p, seed) always yields the same
/// graph.
pub fn erdos_renyi(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > Rational::one() {
        return Err(GraphError::InvalidParams(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    // include a pair iff its u64 draw falls below floor(p * 2^64)
    let threshold: BigInt = (p * Rational::from_integer(BigInt::one() << 64)).floor().to_integer();
    let threshold_u128 = threshold.to_u128().unwrap_or(u128::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let draw: u64 = rng.gen();
            if (draw as u128) < threshold_u128 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniform random attachment tree on n vertices.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, &edges).expect("valid tree")
}

/// A named generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    StarClique,
    InflatedCube,
    DoubleCliqueMatching,
    Windmill,
    PureGlued,
    ErdosRenyi,
}

impl std::str::FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => Family::Complete,
            "cycle" => Family::Cycle,
            "path" => Family::Path,
            "star_clique" => Family::StarClique,
            "inflated_cube" => Family::InflatedCube,
            "double_clique_matching" => Family::DoubleCliqueMatching,
            "windmill" => Family::Windmill,
            "pure_glued" => Family::PureGlued,
            "erdos_renyi" => Family::ErdosRenyi,
            other => {
                return Err(GraphError::InvalidParams(format!(
                    "unknown family '{other}'"
                )))
            }
        })
    }
}

/// A fully specified generation request; the same spec always produces the
/// same graph.
#[derive(Clone, Debug)]
pub struct GenSpec {
    pub family: Family,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, params: BTreeMap<String, String>, seed: u64) -> Self {
        GenSpec {
            family,
            params,
            seed,
        }
    }

    /// Parse "k=4,n=12" style parameter lists.
    pub fn parse_params(text: &str) -> Result<BTreeMap<String, String>> {
        let mut params = BTreeMap::new();
        for part in text.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                GraphError::InvalidParams(format!("expected key=value, got '{part}'"))
            })?;
            params.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(params)
    }

    fn int(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .ok_or_else(|| GraphError::InvalidParams(format!("missing parameter '{key}'")))?
            .parse()
            .map_err(|_| GraphError::InvalidParams(format!("parameter '{key}' is not an integer")))
    }

    pub fn generate(&self) -> Result<Graph> {
        match self.family {
            Family::Complete => Ok(complete(self.int("n")?)),
            Family::Cycle => cycle(self.int("n")?),
            Family::Path => Ok(path(self.int("n")?)),
            Family::StarClique => star_clique(self.int("k")?, self.int("n")?),
            Family::InflatedCube => Ok(inflated_cube()),
            Family::DoubleCliqueMatching => double_clique_matching(self.int("c")?),
            Family::Windmill => windmill(self.int("t")?),
            Family::PureGlued => pure_glued(self.int("n")?, self.int("N")?, self.seed),
            Family::ErdosRenyi => {
                let p_text = self.params.get("p").ok_or_else(|| {
                    GraphError::InvalidParams("missing parameter 'p'".to_string())
                })?;
                let p = crate::ratio::parse_exact(p_text).ok_or_else(|| {
                    GraphError::InvalidParams(format!("cannot parse probability '{p_text}'"))
                })?;
                erdos_renyi(self.int("n")?, &p, self.seed)
            }
        }
    }
}

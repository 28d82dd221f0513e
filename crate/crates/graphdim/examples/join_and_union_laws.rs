//! The two structural laws of the dimension: the join adds dimensions plus
//! one, and a disjoint union averages them by order.
//!
//! Run with: cargo run --example join_and_union_laws

use graphdim::dim::{check_disjoint_union_law, check_iterated_join_law, check_join_law, dim};
use graphdim::generators;
use graphdim::graph::Graph;
use graphdim::ratio::{format_exact, rat};

fn main() {
    // join law: dim(G1 + G2) = 1 + dim G1 + dim G2
    let c4 = generators::cycle(4).unwrap();
    let k2 = generators::complete(2);
    let (lhs, rhs) = check_join_law(&c4, &k2);
    println!(
        "dim(C_4 + K_2) = {}   1 + dim C_4 + dim K_2 = {}",
        format_exact(&lhs),
        format_exact(&rhs)
    );

    // K_N as the N-fold join of single vertices
    let parts = vec![generators::complete(1); 6];
    let (lhs, rhs) = check_iterated_join_law(&parts).unwrap();
    println!(
        "6-fold join of K_1: dim = {} (expected {})",
        format_exact(&lhs),
        format_exact(&rhs)
    );

    // the octahedron is the join of three edgeless pairs
    let two = Graph::edgeless(2);
    let octahedron = two.join(&two).join(&two);
    println!("dim(octahedron) = {}", format_exact(&dim(&octahedron)));

    // union law: components contribute weighted by their order
    let parts = vec![generators::complete(4), Graph::edgeless(4)];
    let (lhs, rhs) = check_disjoint_union_law(&parts).unwrap();
    println!(
        "dim(K_4 with 4 isolated vertices) = {} = weighted average {}",
        format_exact(&lhs),
        format_exact(&rhs)
    );
    assert_eq!(lhs, rat(3, 2));

    // random instances: the laws hold exactly, not approximately
    for seed in 0..5 {
        let g1 = generators::erdos_renyi(6, &rat(1, 3), seed).unwrap();
        let g2 = generators::erdos_renyi(5, &rat(1, 2), seed + 100).unwrap();
        let (lhs, rhs) = check_join_law(&g1, &g2);
        assert_eq!(lhs, rhs);
        println!("random join (seed {seed}): {} = {}", format_exact(&lhs), format_exact(&rhs));
    }
}

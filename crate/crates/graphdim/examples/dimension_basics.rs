//! Computing the inductive dimension of some familiar graphs, plus the
//! per-vertex spectrum of a graph that mixes clique sizes.
//!
//! Run with: cargo run --example dimension_basics

use graphdim::dim::{dim, dim_spectrum, vertex_dim};
use graphdim::generators;
use graphdim::graph::Graph;
use graphdim::ratio::format_exact;

fn main() {
    println!("dim(empty)      = {}", format_exact(&dim(&Graph::empty())));
    println!("dim(5 isolated) = {}", format_exact(&dim(&Graph::edgeless(5))));
    for n in 1..=6 {
        let g = generators::complete(n);
        println!("dim(K_{n})        = {}", format_exact(&dim(&g)));
    }
    for n in [3, 4, 7] {
        let g = generators::cycle(n).unwrap();
        println!("dim(C_{n})        = {}", format_exact(&dim(&g)));
    }

    // K_4 on {0,1,2,3} with a pendant edge {3,4}: vertex 3 sits in both a K_4
    // and a K_2, so its dimension is a non-integer rational.
    let g = Graph::from_edges(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
    )
    .unwrap();
    println!("\nK_4 with a pendant edge:");
    for v in 0..g.order() {
        println!("  dim at vertex {v} = {}", format_exact(&vertex_dim(&g, v).unwrap()));
    }
    let r = dim_spectrum(&g);
    println!("  graph dim = {}", format_exact(&r.graph_dim));
    println!("  uniform = {}, pure = {}", r.is_uniform, r.is_pure);
}

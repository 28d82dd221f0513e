//! Clique-number bounds on the dimension, with the families that saturate
//! them exactly.
//!
//! Run with: cargo run --example bounds_and_saturation

use graphdim::cover::bounds_report;
use graphdim::generators;
use graphdim::graph::Graph;
use graphdim::ratio::format_exact;

fn show(name: &str, g: &Graph) {
    let b = bounds_report(g).unwrap();
    let lc = b
        .lower_connected
        .as_ref()
        .map(|r| format!(", connected lower {}", format_exact(r)))
        .unwrap_or_default();
    println!(
        "{name}: omega {} | {} <= dim {} <= {}{}{}{}",
        b.omega,
        format_exact(&b.lower_basic),
        format_exact(&b.dim),
        format_exact(&b.upper),
        lc,
        if b.saturated_lower { " [lower saturated]" } else { "" },
        if b.saturated_upper { " [upper saturated]" } else { "" },
    );
}

fn main() {
    // the basic lower bound k(k-1)/|G| is tight for K_4 plus isolated vertices
    let g = generators::complete(4).disjoint_union(&Graph::edgeless(4));
    show("K_4 with 4 isolated vertices", &g);

    // the connected lower bound is tight for a star over a K_4 core
    show("star_clique(4, 12)", &generators::star_clique(4, 12).unwrap());

    // complete graphs sit on the upper bound k-1
    show("K_6", &generators::complete(6));

    // triangle-free graphs pin dim between 2/|G| and 1
    show("Petersen", &generators::petersen());

    // generic graphs land strictly between
    show(
        "G(10, 1/2)",
        &generators::erdos_renyi(10, &graphdim::ratio::rat(1, 2), 0).unwrap(),
    );
}

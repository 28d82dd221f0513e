//! Minimum edge clique covers and the identity expressing a graph's dimension
//! through its cover: (|G| - |K_L|) dim G equals the multiplicity-weighted sum
//! of induced-union dimensions over proper subsets of the cover.
//!
//! Run with: cargo run --example clique_cover_formula

use graphdim::cover::{cover_identity_sides, dim_via_cover, signature_counts, augmented_min_cover};
use graphdim::dim::dim;
use graphdim::ecc::min_edge_clique_cover;
use graphdim::generators;
use graphdim::graph::Graph;
use graphdim::ratio::format_exact;

fn show(name: &str, g: &Graph) {
    let cover = augmented_min_cover(g).unwrap();
    println!("{name}: theta_e = {}", cover.cliques.iter().filter(|c| c.len() >= 2).count());
    for c in &cover.cliques {
        println!("  clique {:?}", c.members());
    }
    let counts = signature_counts(g, &cover).unwrap();
    for (signature, count) in &counts.counts {
        println!("  {count} vertex(es) exactly in cover cliques {signature:?}");
    }
    let (lhs, rhs) = cover_identity_sides(g, &cover).unwrap();
    println!(
        "  identity: {} = {}   (dim G = {}, via cover = {})",
        format_exact(&lhs),
        format_exact(&rhs),
        format_exact(&dim(g)),
        format_exact(&dim_via_cover(g, &cover).unwrap()),
    );
    assert_eq!(lhs, rhs);
}

fn main() {
    // two triangles sharing an edge
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    show("two triangles sharing an edge", &g);

    // three triangles sharing one vertex
    show("windmill(3)", &generators::windmill(3).unwrap());

    // K_4 plus a pendant edge
    let g = Graph::from_edges(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
    )
    .unwrap();
    show("K_4 with a pendant edge", &g);

    // triangle-free graphs need one clique per edge
    let petersen = generators::petersen();
    let cover = min_edge_clique_cover(&petersen).unwrap();
    println!(
        "Petersen graph: theta_e = {} (= its {} edges)",
        cover.size(),
        petersen.edge_count()
    );
}

//! Reading and writing graphs: edge lists for humans, graph6 for corpora,
//! and the JSON analysis report.
//!
//! Run with: cargo run --example io_roundtrip

use graphdim::ecc::DEFAULT_NODE_BUDGET;
use graphdim::formats::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6};
use graphdim::generators;
use graphdim::report::analyze;

fn main() {
    // edge list with a header fixing the vertex count
    let text = "n 5\n0 1\n1 2\n0 2\n# vertices 3 and 4 stay isolated\n";
    let g = parse_edge_list(text).unwrap();
    println!("parsed: {} vertices, {} edges", g.order(), g.edge_count());
    print!("serialized back:\n{}", serialize_edge_list(&g));

    // graph6: compact single-line encoding
    let petersen = generators::petersen();
    let g6 = serialize_graph6(&petersen).unwrap();
    println!("\nPetersen in graph6: {g6}");
    assert_eq!(parse_graph6(&g6).unwrap(), petersen);

    // 'Bw' is K_3
    let k3 = parse_graph6("Bw").unwrap();
    assert_eq!(k3, generators::complete(3));
    println!("'Bw' decodes to K_3");

    // the JSON report bundles dimension, cliques, cover, and bounds
    let g = generators::windmill(3).unwrap();
    let report = analyze(&g, Some("windmill(3)".into()), DEFAULT_NODE_BUDGET).unwrap();
    println!("\n{}", report.to_json());
}

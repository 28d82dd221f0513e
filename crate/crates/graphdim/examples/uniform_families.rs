//! Pure graphs have integer dimension N-1; uniform graphs need not be pure
//! and can even have fractional dimension at every vertex.
//!
//! Run with: cargo run --example uniform_families

use graphdim::cover::check_pure_corollary;
use graphdim::dim::dim_spectrum;
use graphdim::generators;
use graphdim::ratio::format_exact;

fn main() {
    // pure graphs: all maximal cliques the same order N, dimension N-1 everywhere
    for (clique_order, n) in [(2, 8), (3, 7), (4, 10)] {
        let g = generators::pure_glued(n, clique_order, 1).unwrap();
        let check = check_pure_corollary(&g).unwrap();
        println!(
            "pure_glued(n={n}, N={clique_order}): dim = {} (expected {}), all vertices equal: {}",
            format_exact(&check.dim),
            format_exact(&check.expected),
            check.vertex_dims_ok
        );
    }

    // uniform but not pure, with fractional dimension: two K_4s joined by a
    // perfect matching; every vertex has dimension 5/2
    let g = generators::double_clique_matching(4).unwrap();
    let r = dim_spectrum(&g);
    println!(
        "\ndouble_clique_matching(4): every vertex dim {}, uniform = {}, pure = {}",
        format_exact(&r.vertex_dims[0]),
        r.is_uniform,
        r.is_pure
    );

    // uniform, integer dimension, still not pure: the inflated cube
    let g = generators::inflated_cube();
    let r = dim_spectrum(&g);
    println!(
        "inflated_cube: {} vertices, every vertex dim {}, uniform = {}, pure = {} (omega {}, gamma {})",
        g.order(),
        format_exact(&r.vertex_dims[0]),
        r.is_uniform,
        r.is_pure,
        r.omega,
        r.gamma
    );
    // its unit spheres are all a triangle plus three isolated vertices
    let sphere = g.unit_sphere(0).unwrap();
    println!(
        "  unit sphere at vertex 0: {} vertices, {} edges, {} components",
        sphere.order(),
        sphere.edge_count(),
        sphere.connected_components().len()
    );
}

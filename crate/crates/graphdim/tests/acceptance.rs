//! End-to-end acceptance run: one pass/fail line per criterion. All equality
//! checks are exact rational comparisons; the only tolerance anywhere is the
//! 30-second wall-clock budget of the performance check.

use graphdim::suite::{self, Check, SuiteConfig};

fn report(n: usize, check: &Check) -> bool {
    println!(
        "criterion {n:2} [{}] {} - {}",
        if check.passed { "PASS" } else { "FAIL" },
        check.name,
        check.detail
    );
    check.passed
}

#[test]
fn acceptance_criteria() {
    let cfg = SuiteConfig::default();
    let mut corpus = Vec::new();
    let mut all = true;

    all &= report(1, &suite::base_values(&cfg, &mut corpus));
    all &= report(2, &suite::join_law(&cfg, &mut corpus));
    all &= report(3, &suite::disjoint_union_law(&cfg, &mut corpus));
    all &= report(4, &suite::ball_sphere_identity(&corpus));

    let connected = suite::connected_corpus(&cfg);
    all &= report(5, &suite::cover_formula_identity(&connected));
    all &= report(6, &suite::pure_graph_law(&cfg));
    all &= report(7, &suite::uniform_constructions());
    all &= report(8, &suite::dimension_bounds(&connected));
    all &= report(9, &suite::ecc_optimality(&cfg, &connected));
    all &= report(10, &suite::oracle_equivalence_and_invariance(&cfg));
    all &= report(11, &suite::performance_smoke(&cfg));

    assert!(all, "at least one acceptance criterion failed");
}

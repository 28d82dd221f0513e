//! JSON analysis report: one schema-stable, byte-deterministic document per
//! graph. Rationals serialize as exact "p/q" strings; the decimal field is a
//! display-only approximation.

use std::time::Instant;

use serde::Serialize;

use crate::cliques;
use crate::cover;
use crate::dim;
use crate::error::Result;
use crate::graph::Graph;
use crate::ratio::{format_decimal, format_exact, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct RationalField {
    pub decimal: String,
    pub exact: String,
}

impl From<&Rational> for RationalField {
    fn from(r: &Rational) -> Self {
        RationalField {
            decimal: format_decimal(r),
            exact: format_exact(r),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem4Field {
    pub equal: bool,
    pub lhs: RationalField,
    pub rhs: RationalField,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsField {
    pub dim: RationalField,
    pub gamma: usize,
    pub lower_basic: RationalField,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_connected: Option<RationalField>,
    pub omega: usize,
    pub saturated_lower: bool,
    pub saturated_upper: bool,
    pub upper: RationalField,
}

impl From<&cover::BoundsReport> for BoundsField {
    fn from(b: &cover::BoundsReport) -> Self {
        BoundsField {
            dim: (&b.dim).into(),
            gamma: b.gamma,
            lower_basic: (&b.lower_basic).into(),
            lower_connected: b.lower_connected.as_ref().map(Into::into),
            omega: b.omega,
            saturated_lower: b.saturated_lower,
            saturated_upper: b.saturated_upper,
            upper: (&b.upper).into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TimingsField {
    pub cliques_ms: u128,
    pub cover_ms: u128,
    pub dim_ms: u128,
}

/// Full analysis of a single graph.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub bounds: Option<BoundsField>,
    pub components: usize,
    pub cover: Vec<Vec<usize>>,
    pub dim: RationalField,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub omega: usize,
    pub gamma: usize,
    pub pure: bool,
    pub theorem4: Option<Theorem4Field>,
    pub theta_e: usize,
    pub timings: TimingsField,
    pub uniform: bool,
    pub vertex_count: usize,
    pub vertex_dims: Vec<RationalField>,
}

/// Analyze `g` with the given ECC node budget.
pub fn analyze(g: &Graph, label: Option<String>, budget: u64) -> Result<AnalysisReport> {
    let t0 = Instant::now();
    let spectrum = dim::dim_spectrum(g);
    let dim_ms = t0.elapsed().as_millis();

    let t1 = Instant::now();
    let _ = cliques::maximal_cliques(g)?;
    let cliques_ms = t1.elapsed().as_millis();

    let t2 = Instant::now();
    let cover = cover::augmented_min_cover_with_budget(g, budget)?;
    let theta_e = cover.cliques.iter().filter(|c| c.len() >= 2).count();
    let theorem4 = if g.is_graph_empty() {
        None
    } else {
        let (lhs, rhs) = cover::cover_identity_sides(g, &cover)?;
        Some(Theorem4Field {
            equal: lhs == rhs,
            lhs: (&lhs).into(),
            rhs: (&rhs).into(),
        })
    };
    let cover_ms = t2.elapsed().as_millis();

    let bounds = if g.is_graph_empty() {
        None
    } else {
        Some((&cover::bounds_report(g)?).into())
    };

    Ok(AnalysisReport {
        bounds,
        components: g.connected_components().len(),
        cover: cover.cliques.iter().map(|c| c.members()).collect(),
        dim: (&spectrum.graph_dim).into(),
        edges: g.edge_count(),
        label,
        omega: spectrum.omega,
        gamma: spectrum.gamma,
        pure: spectrum.is_pure,
        theorem4,
        theta_e,
        timings: TimingsField {
            cliques_ms,
            cover_ms,
            dim_ms,
        },
        uniform: spectrum.is_uniform,
        vertex_count: g.order(),
        vertex_dims: spectrum.vertex_dims.iter().map(Into::into).collect(),
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecc::DEFAULT_NODE_BUDGET;
    use crate::generators;

    #[test]
    fn report_for_double_clique_matching() {
        let g = generators::double_clique_matching(4).unwrap();
        let r = analyze(&g, Some("fig2".into()), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.dim.exact, "5/2");
        assert_eq!(r.dim.decimal, "2.50000");
        assert!(r.uniform);
        assert!(!r.pure);
        assert_eq!(r.theta_e, 6); // two K_4s and four matching edges
        assert!(r.theorem4.unwrap().equal);
        let b = r.bounds.unwrap();
        assert_eq!(b.upper.exact, "3");
        assert!(!b.saturated_upper);
    }

    #[test]
    fn report_json_is_deterministic() {
        let g = generators::windmill(3).unwrap();
        let mut a = analyze(&g, None, DEFAULT_NODE_BUDGET).unwrap();
        let mut b = analyze(&g, None, DEFAULT_NODE_BUDGET).unwrap();
        // timings are wall-clock; everything else must be byte-identical
        a.timings = TimingsField { cliques_ms: 0, cover_ms: 0, dim_ms: 0 };
        b.timings = TimingsField { cliques_ms: 0, cover_ms: 0, dim_ms: 0 };
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn report_handles_empty_and_edgeless_graphs() {
        let r = analyze(&Graph::empty(), None, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.dim.exact, "-1");
        assert!(r.bounds.is_none());
        assert!(r.theorem4.is_none());

        let r = analyze(&Graph::edgeless(3), None, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(r.dim.exact, "0");
        assert_eq!(r.theta_e, 0);
        assert_eq!(r.cover.len(), 3); // singleton per isolated vertex
        assert!(r.theorem4.unwrap().equal);
    }
}

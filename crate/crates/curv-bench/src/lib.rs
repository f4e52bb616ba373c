//! Shared fixtures for the criterion benches.

use curv::{Rational, Scalar, WeightedGraph};

/// The 6-vertex running-example graph: vertices 1..=6, edges between
/// vertices at index distance 1 or 2, unit weights.
pub fn six_vertex_graph<S: Scalar>() -> WeightedGraph<S> {
    let vertices: Vec<(i64, S)> = (1..=6).map(|v| (v, S::one())).collect();
    let mut edges = Vec::new();
    for v in 1..=6i64 {
        for w in (v + 1)..=6 {
            if w - v <= 2 {
                edges.push((v, w, S::one()));
            }
        }
    }
    WeightedGraph::new(vertices, edges).expect("valid graph")
}

pub fn six_vertex_graph_rational() -> WeightedGraph<Rational> {
    six_vertex_graph()
}

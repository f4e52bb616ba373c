//! Shared fixtures: the six-vertex running example with its known closed
//! forms, and a seeded corpus of small weighted graphs.
#![allow(dead_code)] // not every test binary uses every fixture

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use curv::cellcomplex::attach_two_cells;
use curv::{CellComplex, Cycle, Mat, Rational, Scalar, WeightedGraph};

/// Vertices 1..6, adjacent iff the ids differ by 1 or 2, unit weights.  Edge
/// order is lexicographic: (1,2), (1,3), (2,3), (2,4), (3,4), (3,5), (4,5),
/// (4,6), (5,6).
pub fn six_vertex_graph() -> WeightedGraph<Rational> {
    let vertices: Vec<i64> = (1..=6).collect();
    let mut edges = Vec::new();
    for u in 1..=6i64 {
        for v in (u + 1)..=6 {
            if v - u <= 2 {
                edges.push((u, v));
            }
        }
    }
    WeightedGraph::unit(&vertices, &edges).expect("valid graph")
}

/// The nine cycles of length at most 5, weighted to attain the max-min
/// optimum 2/3: outer triangles and all 4-cycles at 2/3, inner triangles at
/// 1/3, 5-cycles at zero.
pub fn six_vertex_optimal_cells(g: &WeightedGraph<Rational>) -> Vec<(Cycle, Rational)> {
    let cell = |seq: &[i64], num: i64| {
        (
            g.canonical_cycle(seq).expect("cycle of the graph"),
            Rational::ratio(num, 3),
        )
    };
    vec![
        cell(&[1, 2, 3], 2),
        cell(&[2, 3, 4], 1),
        cell(&[3, 4, 5], 1),
        cell(&[4, 5, 6], 2),
        cell(&[1, 2, 4, 3], 2),
        cell(&[2, 3, 5, 4], 2),
        cell(&[3, 4, 6, 5], 2),
        cell(&[1, 2, 4, 5, 3], 0),
        cell(&[2, 4, 6, 5, 3], 0),
    ]
}

pub fn six_vertex_optimal_complex() -> CellComplex<Rational> {
    let g = six_vertex_graph();
    let cells = six_vertex_optimal_cells(&g);
    attach_two_cells(g, &cells).expect("valid complex")
}

/// Three times the Hodge matrix of the optimal complex, in edge order.
pub const SIX_VERTEX_HODGE_X3: [[i64; 9]; 9] = [
    [10, -1, -1, -1, -2, 0, 0, 0, 0],
    [-1, 10, 1, -2, -1, -3, 0, 0, 0],
    [-1, 1, 11, 0, -2, -1, -2, 0, 0],
    [-1, -2, 0, 11, 0, -2, -1, -3, 0],
    [-2, -1, -2, 0, 12, 0, -2, -1, -2],
    [0, -3, -1, -2, 0, 11, 0, -2, -1],
    [0, 0, -2, -1, -2, 0, 11, 1, -1],
    [0, 0, 0, -3, -1, -2, 1, 10, -1],
    [0, 0, 0, 0, -2, -1, -1, -1, 10],
];

/// The graph part `δδ*` of the edge Laplacian (no 2-cells), in edge order.
pub const SIX_VERTEX_DOWN_LAPLACIAN: [[i64; 9]; 9] = [
    [2, 1, -1, -1, 0, 0, 0, 0, 0],
    [1, 2, 1, 0, -1, -1, 0, 0, 0],
    [-1, 1, 2, 1, -1, -1, 0, 0, 0],
    [-1, 0, 1, 2, 1, 0, -1, -1, 0],
    [0, -1, -1, 1, 2, 1, -1, -1, 0],
    [0, -1, -1, 0, 1, 2, 1, 0, -1],
    [0, 0, 0, -1, -1, 1, 2, 1, -1],
    [0, 0, 0, -1, -1, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, -1, -1, 1, 2],
];

/// A closed-form optimal dual operator for the six-vertex max-min program:
/// 1/3 on the rows of edges (2,4), (3,4), (3,5), zero elsewhere.
pub fn six_vertex_optimal_j() -> Mat<Rational> {
    let mut j = Mat::zeros(9, 9);
    for row in 3..6 {
        for col in 0..9 {
            j[(row, col)] = Rational::ratio(1, 3);
        }
    }
    j
}

/// Forman curvature of the optimal complex per edge, in edge order.
pub fn six_vertex_forman() -> Vec<Rational> {
    [5, 2, 4, 2, 2, 2, 4, 2, 5]
        .iter()
        .map(|&num| Rational::ratio(num, 3))
        .collect()
}

/// 100 pseudo-random connected graphs on 4..=7 vertices with weights drawn
/// from {1, 2, 3} / {1, 2, 3}.  Fully determined by the fixed seed.
pub fn corpus() -> Vec<WeightedGraph<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_C0DE);
    let mut graphs = Vec::with_capacity(100);
    while graphs.len() < 100 {
        let n: i64 = rng.gen_range(4..=7);
        let vertices: Vec<(i64, Rational)> =
            (1..=n).map(|v| (v, small_weight(&mut rng))).collect();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                if rng.gen_bool(0.45) {
                    edges.push((u, v, small_weight(&mut rng)));
                }
            }
        }
        let g = WeightedGraph::new(vertices, edges).expect("construction cannot fail");
        if g.n_edges() > 0 && g.is_connected() {
            graphs.push(g);
        }
    }
    graphs
}

pub fn small_weight(rng: &mut ChaCha8Rng) -> Rational {
    Rational::ratio(rng.gen_range(1..=3), rng.gen_range(1..=3))
}

/// A non-negative 2-cell weight, zero with probability ~0.3.
pub fn random_cell_weight(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_bool(0.3) {
        Rational::zero()
    } else {
        Rational::ratio(rng.gen_range(1..=4), rng.gen_range(1..=3))
    }
}

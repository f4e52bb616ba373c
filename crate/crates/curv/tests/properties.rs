//! Randomized invariants: cycle canonicalization, the chain-complex and
//! adjointness identities, LP optimality certificates, norm axioms, the
//! semigroup law, and LP domination of feasible weight assignments.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use curv::cellcomplex::{attach_two_cells, CycleCriterion};
use curv::curvature::{forman, max_forman_edge};
use curv::numerics::{matrix_exponential, norm_p_omega};
use curv::simplex::{Bound, LinearProgram, LpStatus, Rel, Sense};
use curv::{Cycle, Mat, Rational, Scalar, WeightedGraph, WeightedSpace};

/// A fixed slice of the corpus together with its short cycles, computed once.
fn shapes() -> &'static [(WeightedGraph<Rational>, Vec<Cycle>)] {
    static SHAPES: OnceLock<Vec<(WeightedGraph<Rational>, Vec<Cycle>)>> = OnceLock::new();
    SHAPES.get_or_init(|| {
        common::corpus()
            .into_iter()
            .take(40)
            .map(|g| {
                let cycles = g.enumerate_cycles(CycleCriterion::MaxLength(4));
                (g, cycles)
            })
            .collect()
    })
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

prop_compose! {
    fn positive()(n in 1i64..=6, d in 1i64..=4) -> Rational { rat(n, d) }
}

prop_compose! {
    fn nonneg()(n in 0i64..=5, d in 1i64..=3) -> Rational { rat(n, d) }
}

prop_compose! {
    fn signed()(n in -9i64..=9, d in 1i64..=5) -> Rational { rat(n, d) }
}

fn distinct_ids() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(0i64..1000, 3..=8)
        .prop_map(|set| set.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
}

proptest! {
    /// Canonical form is a class invariant: every rotation of the sequence,
    /// in either direction of traversal, canonicalizes identically.
    #[test]
    fn canonical_cycle_ignores_rotation_and_reflection(
        seq in distinct_ids(),
        shift in 0usize..8,
        reverse in any::<bool>(),
    ) {
        let baseline = Cycle::canonical(&seq).expect("distinct ids");
        let mut moved = seq;
        let len = moved.len();
        moved.rotate_left(shift % len);
        if reverse {
            moved.reverse();
        }
        prop_assert_eq!(Cycle::canonical(&moved).expect("distinct ids"), baseline);
    }
}

fn shape_with_cell_weights() -> impl Strategy<Value = (usize, Vec<Rational>)> {
    (0..shapes().len()).prop_flat_map(|i| {
        let n = shapes()[i].1.len();
        (Just(i), prop::collection::vec(nonneg(), n..=n))
    })
}

proptest! {
    /// The coboundary squares to zero on any valid complex.
    #[test]
    fn coboundary_squares_to_zero((i, weights) in shape_with_cell_weights()) {
        let (g, cycles) = &shapes()[i];
        let cells: Vec<(Cycle, Rational)> =
            cycles.iter().cloned().zip(weights).collect();
        let c = attach_two_cells(g.clone(), &cells).expect("valid complex");
        let d1 = c.coboundary_matrix(1);
        let d0 = c.coboundary_matrix(0);
        prop_assert_eq!(d1.mul(&d0), Mat::zeros(c.n_cells(2), c.n_cells(0)));
    }
}

fn shape_with_cochains() -> impl Strategy<Value = (usize, Vec<Rational>, Vec<Rational>, Vec<Rational>)>
{
    (0..shapes().len()).prop_flat_map(|i| {
        let (g, cycles) = &shapes()[i];
        let ne = g.n_edges();
        let nc = cycles.len();
        (
            Just(i),
            prop::collection::vec(positive(), nc..=nc),
            prop::collection::vec(signed(), ne..=ne),
            prop::collection::vec(signed(), ne..=ne),
        )
    })
}

proptest! {
    /// The Hodge Laplacian is self-adjoint and positive semidefinite in the
    /// weighted inner product — exactly, over the rationals.
    #[test]
    fn hodge_laplacian_self_adjoint_and_psd(
        (i, weights, f, g_vec) in shape_with_cochains(),
    ) {
        let (g, cycles) = &shapes()[i];
        let cells: Vec<(Cycle, Rational)> =
            cycles.iter().cloned().zip(weights).collect();
        let c = attach_two_cells(g.clone(), &cells).expect("valid complex");
        let space = WeightedSpace::new(g.edge_weights().to_vec());
        let lap = c.hodge_matrix(1);
        let lap_f = lap.mul_vec(&f);
        let lap_g = lap.mul_vec(&g_vec);
        prop_assert_eq!(space.inner(&lap_f, &g_vec), space.inner(&f, &lap_g));
        prop_assert!(!space.inner(&lap_f, &f).is_negative());
    }
}

fn lp_strategy() -> impl Strategy<Value = LinearProgram<Rational>> {
    let bound = prop::sample::select(vec![Bound::NonNeg, Bound::Free, Bound::NonPos]);
    let rel = prop::sample::select(vec![Rel::Le, Rel::Eq, Rel::Ge]);
    let vars = prop::collection::vec((bound, signed()), 1..=4);
    vars.prop_flat_map(move |vs| {
        let nv = vs.len();
        let row = (prop::collection::vec(signed(), nv..=nv), rel.clone(), signed());
        (Just(vs), prop::collection::vec(row, 1..=4), any::<bool>())
    })
    .prop_map(|(vs, rows, maximize)| {
        let mut lp = LinearProgram::new(if maximize { Sense::Max } else { Sense::Min });
        for (b, obj) in vs {
            lp.add_var(b, obj);
        }
        for (coeffs, rel, rhs) in rows {
            let indexed: Vec<(usize, Rational)> = coeffs.into_iter().enumerate().collect();
            lp.add_constraint(&indexed, rel, rhs);
        }
        lp
    })
}

proptest! {
    /// Every optimum the solver reports passes its own certificate check:
    /// primal and dual feasibility, complementary slackness, and matching
    /// objective values.
    #[test]
    fn simplex_optima_verify(lp in lp_strategy()) {
        let sol = lp.solve();
        if sol.status == LpStatus::Optimal {
            prop_assert_eq!(lp.verify(&sol), Ok(()));
        }
    }
}

fn space_with_vectors() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>)> {
    (1usize..=8).prop_flat_map(|n| {
        (
            prop::collection::vec(0.5..3.0f64, n..=n),
            prop::collection::vec(0.25..2.0f64, n..=n),
            prop::collection::vec(-5.0..5.0f64, n..=n),
            prop::collection::vec(-5.0..5.0f64, n..=n),
        )
    })
}

proptest! {
    /// Weighted p-norms are norms (homogeneous, subadditive), approach the
    /// sup norm as p grows, and reject exponents below 1.
    #[test]
    fn weighted_norms_behave(
        (m, omega, f, g) in space_with_vectors(),
        p in prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, f64::INFINITY]),
        c in -3.0..3.0f64,
    ) {
        let space = WeightedSpace::new(m);
        let om = Some(omega.as_slice());
        let norm = |v: &[f64]| norm_p_omega(v, p, om, &space).expect("valid exponent");

        let scaled: Vec<f64> = f.iter().map(|v| c * v).collect();
        prop_assert!((norm(&scaled) - c.abs() * norm(&f)).abs() <= 1e-9 * (1.0 + norm(&f)));

        let sum: Vec<f64> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
        prop_assert!(norm(&sum) <= norm(&f) + norm(&g) + 1e-9);

        let probe = norm_p_omega(&f, 1e6, om, &space).expect("valid exponent");
        let sup = norm_p_omega(&f, f64::INFINITY, om, &space).expect("valid exponent");
        prop_assert!((probe - sup).abs() <= 1e-4 * (1.0 + sup));

        prop_assert!(norm_p_omega(&f, 0.5, om, &space).is_err());
    }
}

fn square_matrix() -> impl Strategy<Value = Mat<f64>> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-1.0..1.0f64, n..=n), n..=n)
            .prop_map(Mat::from_rows)
    })
}

proptest! {
    /// `e^{-(s+t)A} = e^{-sA} e^{-tA}`, and `t = 0` gives the identity.
    #[test]
    fn matrix_exponential_is_a_semigroup(
        a in square_matrix(),
        s in 0.0..1.0f64,
        t in 0.0..1.0f64,
    ) {
        let n = a.rows();
        let combined = matrix_exponential(&a, s + t);
        let product = matrix_exponential(&a, s).mul(&matrix_exponential(&a, t));
        for r in 0..n {
            for c in 0..n {
                let (x, y) = (combined[(r, c)], product[(r, c)]);
                prop_assert!((x - y).abs() <= 1e-9 * (1.0 + x.abs() + y.abs()));
            }
        }
        let at_zero = matrix_exponential(&a, 0.0);
        for r in 0..n {
            for c in 0..n {
                let expect = if r == c { 1.0 } else { 0.0 };
                prop_assert!((at_zero[(r, c)] - expect).abs() <= 1e-12);
            }
        }
    }
}

proptest! {
    /// The maximizing LP dominates every feasible assignment: no choice of
    /// nonnegative weights on the candidate cycles beats its optimum.
    #[test]
    fn max_forman_dominates_feasible_weights(
        (i, weights) in shape_with_cell_weights(),
        edge_pick in any::<prop::sample::Index>(),
    ) {
        let (g, cycles) = &shapes()[i];
        let edge = edge_pick.index(g.n_edges());
        let cert = max_forman_edge(g, edge, cycles, None).expect("solvable");
        let best = cert.value.unwrap_finite();

        let cells: Vec<(Cycle, Rational)> =
            cycles.iter().cloned().zip(weights).collect();
        let c = attach_two_cells(g.clone(), &cells).expect("valid complex");
        let f = forman(&c, 1, edge, None);
        prop_assert!(
            f <= *best,
            "edge {:?}: feasible value {} beats optimum {}",
            g.edge_ids(edge), f, best
        );
    }
}

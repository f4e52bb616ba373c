//! The README walk-through: curvatures of a unit triangle, exactly.

use curv::cellcomplex::{attach_two_cells, CycleCriterion};
use curv::curvature::{forman_all, maxmin_forman, ollivier_edge};
use curv::{Rational, Scalar, WeightedGraph};

fn main() -> Result<(), curv::Error> {
    let one = Rational::one;
    let g = WeightedGraph::new(
        vec![(1, one()), (2, one()), (3, one())],
        vec![(1, 2, one()), (1, 3, one()), (2, 3, one())],
    )?;

    // Attach the triangle as a 2-cell of weight 1.
    let cell = g.canonical_cycle(&[1, 2, 3])?;
    let c = attach_two_cells(g.clone(), &[(cell, one())])?;

    // Forman curvature of each edge, and Ollivier curvature of edge 0.
    let f = forman_all(&c, 1, None);
    let kappa = ollivier_edge(&c, 0, None)?;
    assert_eq!(&f[0], kappa.value.unwrap_finite()); // both equal 3

    // Best uniform bound over all 2-cell weightings, with certificate.
    let candidates = g.enumerate_cycles(CycleCriterion::MaxLength(5));
    let best = maxmin_forman(&g, &candidates, None)?;
    println!("R* = {}", best.value);
    Ok(())
}

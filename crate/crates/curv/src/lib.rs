//! Curvature of weighted graphs and two-dimensional cell complexes.
//!
//! The library computes Forman-type and Ollivier-type curvature of cells in a
//! weighted cell complex and certifies the relation between the two: the
//! Ollivier curvature of an edge equals the largest Forman curvature
//! obtainable by re-weighting the two-cells of the complex.  Everything is
//! built on a small exact-rational toolkit: dense matrices, a two-phase
//! simplex solver with dual certificates, Hodge Laplacians, and optimal
//! transport problems stated as linear programs.
//!
//! The main entry points:
//!
//! * [`cellcomplex`] — weighted graphs, cycles, two-dimensional cell
//!   complexes, coboundary/adjoint/Hodge matrices, validation.
//! * [`curvature`] — Forman curvature, Ollivier curvature (four equivalent
//!   formulations), the max-over-weights and max-min programs with dual
//!   certificates, and translations between transport plans and cycle
//!   weights.
//! * [`analysis`] — distances, degree statistics, the diameter bound, and
//!   semigroup contraction checks.
//! * [`simplex`] — the underlying exact linear programming solver.
//! * [`numerics`] — scalars (exact rationals or floats), matrices, weighted
//!   norms, and the matrix exponential.
//!
//! Computations are generic over the scalar type: use [`Rational`] for exact
//! certificates or `f64` for fast floating point with a small tolerance.

pub mod analysis;
pub mod cellcomplex;
pub mod curvature;
pub mod numerics;
pub mod simplex;

mod error;

pub use cellcomplex::{CellComplex, Cochain, Cycle, ValidationReport, WeightedGraph};
pub use curvature::{CurvatureCertificate, CurvatureValue, Witness};
pub use error::Error;
pub use numerics::{Mat, Rational, Scalar, WeightedSpace};

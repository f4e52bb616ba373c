//! Scalars, dense matrices, weighted inner products and norms, and the
//! matrix exponential.
//!
//! All higher layers are generic over [`Scalar`], which is implemented by
//! [`Rational`] (arbitrary-precision rationals, exact arithmetic) and by
//! `f64` (floating point with a fixed comparison tolerance).

mod expm;
mod matrix;
mod scalar;
mod space;

pub use expm::{expm_self_adjoint, jacobi_eigen, matrix_exponential};
pub use matrix::Mat;
pub use scalar::{Rational, Scalar, FLOAT_EPS};
pub use space::{norm_p_omega, WeightedSpace};

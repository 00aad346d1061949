//! Exact quaternionic and octonionic barred-operator algebra.

pub mod barred_octonion;
pub mod barred_quaternion;
mod cache;
pub mod error;
pub mod group_lab;
pub mod json;
pub mod linalg;
pub mod lorentz;
pub mod matrix_bridge;
pub mod octonion;
pub mod quaternion;
pub mod sample;
pub mod scalar;
pub mod suites;
pub mod table;
pub mod text;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational, the default exact scalar.
pub type Rational = num_rational::BigRational;

pub type QuaternionQ = quaternion::Quaternion<Rational>;
pub type QuaternionF64 = quaternion::Quaternion<f64>;
pub type OctonionQ = octonion::Octonion<Rational>;
pub type OctonionF64 = octonion::Octonion<f64>;
pub type BarredQuaternionQ = barred_quaternion::BarredQuaternion<Rational>;
pub type BarredQuaternionF64 = barred_quaternion::BarredQuaternion<f64>;
pub type LeftBarredOctonionQ = barred_octonion::LeftBarredOctonion<Rational>;
pub type RealMatrixQ = linalg::RealMatrix<Rational>;
pub type RealMatrixF64 = linalg::RealMatrix<f64>;
pub type OperatorMatrixQ = group_lab::OperatorMatrix<Rational>;

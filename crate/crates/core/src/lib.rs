//! Twisted K-theory of compact Lie groups at desk scale: Weyl dimensions and
//! induced representations, Tate complexes over the integers with Smith
//! normal form homology, the cyclic orders `c(G, k)`, and Spin^c
//! characteristic numbers.
//!
//! Everything is exact. The generic code is parameterized by [`Scalar`],
//! implemented for `i64`, `i128` and [`BigInt`]; the aliases below fix the
//! arbitrary-precision choice.

pub mod error;
pub mod matrix;
pub mod orders;
pub mod rootrep;
pub mod scalar;
pub mod snf;
pub mod spinc;
pub mod tate;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision integer used by default.
pub type Int = BigInt;
pub type IntMatrix = matrix::Matrix<Int>;
pub type IntSmithForm = snf::SmithForm<Int>;
pub type IntTateSpec = tate::complex::TateSpec<Int>;
pub type IntTateComplex = tate::complex::TateComplex<Int>;
pub type IntHomologyTable = tate::homology::HomologyTable<Int>;
pub type IntInductionResult = rootrep::InductionResult<Int>;

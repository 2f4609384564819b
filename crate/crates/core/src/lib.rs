//! Lattice-point combinatorics of binomial primary decomposition.
//!
//! * [`lattice`]: exact integer normal forms, kernels, saturation, finite
//!   quotients and partial characters.
//! * [`congruence`]: congruence classes (M-subgraphs) on `N^q`, bounded-class
//!   catalogs with completeness certificates.
//! * [`ideals`]: lattice basis ideals, block decompositions and explicit toral
//!   primary components.
//! * [`series`]: polynomial and truncated series solutions of the associated
//!   constant-coefficient differential systems.
//!
//! Matrix and normal-form code is generic over the scalar traits in
//! [`scalar`]; the rest of the crate works with the aliases below.

pub mod congruence;
pub mod error;
pub mod ideals;
pub mod lattice;
pub mod matrix;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use matrix::{int_matrix, Matrix};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;
/// Integer matrix: the carrier of `A`, `B` and `M`.
pub type IntMat = Matrix<Int>;
/// Rational matrix.
pub type RatMat = Matrix<Rational>;

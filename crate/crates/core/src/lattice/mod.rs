//! Exact integer lattice algebra: normal forms, kernels, saturation, finite
//! quotients and partial characters.

mod basis;
mod character;
mod mixed;
pub mod normal_form;

pub use basis::{kernel_basis, quotient_invariants, saturation, LatticeBasis};
pub use character::{characters_extending_trivial, PartialCharacter, RootOfUnity};
pub use mixed::{cokernel_matrix, is_mixed_lattice, Mixedness};
pub use normal_form::{hnf, snf, Hermite, SmithDecomposition};

pub(crate) use basis::to_bigints;

//! Lattice basis ideals, lattice ideals by membership, block decompositions
//! and explicit toral primary components.

mod binomial;
mod component;
mod decomposition;

pub use binomial::{binomial_in_lattice_ideal, lattice_basis_ideal, BinomialGen, LatticeIdealHandle};
pub use component::{
    monomial_membership, stabilization_scan, toral_component_with_ideal, ComponentAttempt, toral_components,
    toral_primary_component, PrimaryComponentDescription, ScanEntry, StabilizationScan,
};
pub use decomposition::{
    block_decompositions, characters_for_decomposition, toral_filter, BlockDecomposition,
    CandidateStatus,
};

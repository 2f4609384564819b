//! Explicit toral primary components `C_{ρ,J} = I(B) + I_{ρ,J} + U_M`.
//!
//! A component is carried combinatorially: the matrix, the block
//! decomposition, the character, and the minimal generators of the monomial
//! ideal `U_M` over the coordinates outside `J`. No polynomial generators are
//! produced for the lattice ideal or for the colon ideal.

use std::ops::RangeInclusive;

use super::decomposition::{
    block_decompositions, characters_for_decomposition, check_lattice_basis, toral_filter,
    BlockDecomposition,
};
use crate::congruence::{
    bounded_catalog, min_gens_unbounded_ideal, moves_from_columns, ExponentVector, MonomialIdealSet,
};
use crate::error::{Error, Result};
use crate::lattice::PartialCharacter;
use crate::IntMat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponentDescription {
    pub b: IntMat,
    pub decomposition: BlockDecomposition,
    /// Character on `sat(Z·B_J)`.
    pub character: PartialCharacter,
    /// Minimal generators of `U_M` over the rows of `M`.
    pub u_min_gens: MonomialIdealSet,
    pub toral: bool,
    /// The monomial ideal `K` used for the embedded-style construction.
    pub k_used: Option<MonomialIdealSet>,
    /// Certificate degree of the catalog; `None` when `q = 0`.
    pub certificate_degree: Option<u64>,
}

impl PrimaryComponentDescription {
    pub fn q(&self) -> usize {
        self.decomposition.q()
    }
}

/// Component for a toral decomposition. Without `e` this is the minimal-prime
/// component with `U` the unbounded ideal of `M`. With `e`, the congruence is
/// augmented by `K = ⟨x_i^e⟩` over the rows of `M` and `U` is the ideal of
/// points whose class is infinite or meets `K`.
pub fn toral_primary_component(
    b: &IntMat,
    dec: &BlockDecomposition,
    character: &PartialCharacter,
    e: Option<u64>,
    max_degree: u64,
    node_cap: usize,
) -> Result<PrimaryComponentDescription> {
    let k = e.map(|e| MonomialIdealSet::pure_powers(dec.q(), e));
    toral_component_with_ideal(b, dec, character, k.as_ref(), max_degree, node_cap)
}

/// As [`toral_primary_component`] with an arbitrary monomial ideal `K`
/// containing a pure power of every variable of `M`.
pub fn toral_component_with_ideal(
    b: &IntMat,
    dec: &BlockDecomposition,
    character: &PartialCharacter,
    k: Option<&MonomialIdealSet>,
    max_degree: u64,
    node_cap: usize,
) -> Result<PrimaryComponentDescription> {
    if !toral_filter(dec) {
        return Err(Error::NotToral);
    }
    let q = dec.q();
    if character.domain().ambient_dim() != dec.j.len() {
        return Err(Error::Dimension { expected: dec.j.len(), got: character.domain().ambient_dim() });
    }
    let base = PrimaryComponentDescription {
        b: b.clone(),
        decomposition: dec.clone(),
        character: character.clone(),
        u_min_gens: MonomialIdealSet::empty(q),
        toral: true,
        k_used: k.cloned(),
        certificate_degree: None,
    };
    if q == 0 {
        // the component is I_ρ itself
        return Ok(base);
    }
    let moves = moves_from_columns(&dec.m_block)?;
    let catalog = bounded_catalog(&moves, k, max_degree, node_cap)?;
    let d_star = catalog.require_complete()?;
    Ok(PrimaryComponentDescription {
        u_min_gens: min_gens_unbounded_ideal(&catalog)?,
        certificate_degree: Some(d_star),
        ..base
    })
}

/// One toral candidate `(decomposition, character)` and the attempt to build
/// its component. Without the irreducibility filter a toral candidate may
/// have infinitely many bounded classes; its catalog then never certifies
/// and `outcome` carries the `IncompleteCatalog` failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAttempt {
    pub decomposition: BlockDecomposition,
    pub character: PartialCharacter,
    pub outcome: Result<PrimaryComponentDescription>,
}

impl ComponentAttempt {
    pub fn component(&self) -> Option<&PrimaryComponentDescription> {
        self.outcome.as_ref().ok()
    }
}

/// Components for every toral decomposition and every character, ordered by
/// `(q, rows of M, character index)`. Invalid `B` fails as a whole; a
/// candidate whose catalog does not certify fails on its own.
pub fn toral_components(
    b: &IntMat,
    e: Option<u64>,
    max_degree: u64,
    node_cap: usize,
) -> Result<Vec<ComponentAttempt>> {
    let mut out = Vec::new();
    for dec in block_decompositions(b)?.into_iter().filter(toral_filter) {
        for rho in characters_for_decomposition(b, &dec)? {
            let outcome = toral_primary_component(b, &dec, &rho, e, max_degree, node_cap);
            out.push(ComponentAttempt { decomposition: dec.clone(), character: rho, outcome });
        }
    }
    Ok(out)
}

/// Whether `t^u` lies in the component: the projection of `u` onto the rows
/// of `M` must lie in `U`.
pub fn monomial_membership(comp: &PrimaryComponentDescription, u: &ExponentVector) -> Result<bool> {
    let n = comp.b.rows();
    if u.dim() != n {
        return Err(Error::Dimension { expected: n, got: u.dim() });
    }
    if !u.is_nonnegative() {
        return Err(Error::NegativeExponent(u.coords().to_vec()));
    }
    let projected =
        ExponentVector::new(comp.decomposition.rows_m.iter().map(|&r| u.coords()[r]).collect());
    Ok(comp.u_min_gens.contains(&projected))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub e: u64,
    pub generators: MonomialIdealSet,
    pub agrees_with_previous: bool,
}

/// The `U_K` ideals for a range of powers `e`. Agreement of consecutive
/// entries is evidence that `e` is large enough, not a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationScan {
    pub entries: Vec<ScanEntry>,
}

impl StabilizationScan {
    /// Smallest `e` from which every later entry of the scan agrees, provided
    /// at least two entries agree at the end.
    pub fn stable_from(&self) -> Option<u64> {
        let last = self.entries.last()?;
        if !last.agrees_with_previous {
            return None;
        }
        let mut i = self.entries.len() - 1;
        while i > 0 && self.entries[i].agrees_with_previous {
            i -= 1;
        }
        Some(self.entries[i].e)
    }
}

pub fn stabilization_scan(
    b: &IntMat,
    dec: &BlockDecomposition,
    character: &PartialCharacter,
    e_range: RangeInclusive<u64>,
    max_degree: u64,
    node_cap: usize,
) -> Result<StabilizationScan> {
    check_lattice_basis(b)?;
    let mut entries: Vec<ScanEntry> = Vec::new();
    for e in e_range {
        if e == 0 {
            return Err(Error::Shape("power e must be positive".into()));
        }
        let comp = toral_primary_component(b, dec, character, Some(e), max_degree, node_cap)?;
        let agrees = entries.last().is_some_and(|p| p.generators == comp.u_min_gens);
        entries.push(ScanEntry { e, generators: comp.u_min_gens, agrees_with_previous: agrees });
    }
    Ok(StabilizationScan { entries })
}

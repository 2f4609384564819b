use std::fmt;

use num_traits::ToPrimitive;

use crate::congruence::ExponentVector;
use crate::error::{Error, Result};
use super::decomposition::check_lattice_basis;
use crate::lattice::{to_bigints, PartialCharacter, RootOfUnity};
use crate::{Int, IntMat};

/// `t^u − λ·t^v`, or the monomial `t^u` when `coefficient` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialGen {
    pub u: ExponentVector,
    pub v: ExponentVector,
    pub coefficient: Option<RootOfUnity>,
}

impl BinomialGen {
    pub fn binomial(u: ExponentVector, v: ExponentVector, coefficient: RootOfUnity) -> Self {
        Self { u, v, coefficient: Some(coefficient) }
    }

    pub fn monomial(u: ExponentVector) -> Self {
        let v = ExponentVector::zeros(u.dim());
        Self { u, v, coefficient: None }
    }

    /// `t^{w₊} − t^{w₋}`
    pub fn pure_difference(w: &[i64]) -> Self {
        let plus = w.iter().map(|&x| x.max(0)).collect();
        let minus = w.iter().map(|&x| (-x).max(0)).collect();
        Self::binomial(ExponentVector::new(plus), ExponentVector::new(minus), RootOfUnity::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.coefficient.is_none()
    }

    pub fn is_pure_difference(&self) -> bool {
        self.coefficient == Some(RootOfUnity::ONE)
            && self.u.coords().iter().zip(self.v.coords()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Display for BinomialGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficient {
            None => write!(f, "t^{}", self.u),
            Some(c) if c.is_one() => write!(f, "t^{} - t^{}", self.u, self.v),
            Some(c) => write!(f, "t^{} - e(2pi i {}/{}) t^{}", self.u, c.numerator(), c.order(), self.v),
        }
    }
}

/// `I(B)`: one pure-difference binomial per column of `B`. Requires `Z·B` to
/// be mixed (mixed columns suffice for square `B`).
pub fn lattice_basis_ideal(b: &IntMat) -> Result<Vec<BinomialGen>> {
    check_lattice_basis(b)?;
    b.columns()
        .iter()
        .map(|c| {
            let w = c
                .iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Overflow(x.clone())))
                .collect::<Result<Vec<_>>>()?;
            Ok(BinomialGen::pure_difference(&w))
        })
        .collect()
}

/// The lattice ideal `I_ρ`, represented by its character and decided by
/// membership only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeIdealHandle {
    character: PartialCharacter,
}

impl LatticeIdealHandle {
    pub fn new(character: PartialCharacter) -> Self {
        Self { character }
    }

    pub fn character(&self) -> &PartialCharacter {
        &self.character
    }

    pub fn ambient_dim(&self) -> usize {
        self.character.domain().ambient_dim()
    }
}

/// `t^u − λ·t^v ∈ I_ρ` iff `u − v ∈ L` and `λ = ρ(u − v)`. Monomials are never
/// members.
pub fn binomial_in_lattice_ideal(h: &LatticeIdealHandle, g: &BinomialGen) -> bool {
    let Some(lambda) = g.coefficient else {
        return false;
    };
    if g.u.dim() != h.ambient_dim() || g.v.dim() != h.ambient_dim() {
        return false;
    }
    let diff: Vec<Int> = to_bigints(g.u.sub(&g.v).coords());
    match h.character.evaluate(&diff) {
        Ok(value) => value == lambda,
        Err(_) => false,
    }
}

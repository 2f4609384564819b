//! Partial characters with values in the roots of unity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::basis::{quotient_invariants, LatticeBasis};
use super::normal_form::snf;
use crate::error::{Error, Result};
use crate::Int;

/// `exp(2πi·k/n)`, stored reduced: `0 <= k < n`, `gcd(k, n) = 1`, and the
/// identity is `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    k: u64,
    n: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { k: 0, n: 1 };

    /// Reduces `k/n` modulo 1. Panics if `n == 0`.
    pub fn new(k: i128, n: u64) -> Self {
        assert!(n > 0, "root of unity with order 0");
        let k = k.rem_euclid(n as i128) as u64;
        Self::reduced(k, n)
    }

    fn reduced(k: u64, n: u64) -> Self {
        if k == 0 {
            return Self::ONE;
        }
        let g = k.gcd(&n);
        Self { k: k / g, n: n / g }
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn is_one(&self) -> bool {
        self.k == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n.lcm(&other.n);
        let k = (self.k as u128 * (n / self.n) as u128 + other.k as u128 * (n / other.n) as u128)
            % n as u128;
        Self::reduced(k as u64, n)
    }

    pub fn pow(&self, e: &BigInt) -> Self {
        let n = BigInt::from(self.n);
        let e = e.mod_floor(&n).to_u64().expect("reduced exponent fits");
        let k = (self.k as u128 * e as u128) % self.n as u128;
        Self::reduced(k as u64, self.n)
    }

    pub fn inverse(&self) -> Self {
        Self::reduced((self.n - self.k) % self.n, self.n)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.n)
    }
}

/// A homomorphism `ρ: L → C*`, given by its values on the basis of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCharacter {
    domain: LatticeBasis,
    values: Vec<RootOfUnity>,
}

impl PartialCharacter {
    pub fn new(domain: LatticeBasis, values: Vec<RootOfUnity>) -> Result<Self> {
        if values.len() != domain.rank() {
            return Err(Error::Dimension { expected: domain.rank(), got: values.len() });
        }
        Ok(Self { domain, values })
    }

    pub fn trivial(domain: LatticeBasis) -> Self {
        let values = vec![RootOfUnity::ONE; domain.rank()];
        Self { domain, values }
    }

    pub fn domain(&self) -> &LatticeBasis {
        &self.domain
    }

    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(RootOfUnity::is_one)
    }

    /// `ρ(u)` for `u` in the domain lattice.
    pub fn evaluate(&self, u: &[Int]) -> Result<RootOfUnity> {
        let coords =
            self.domain.coordinates(u).ok_or_else(|| Error::NotInDomain { vector: u.to_vec() })?;
        Ok(coords
            .iter()
            .zip(&self.values)
            .fold(RootOfUnity::ONE, |acc, (c, v)| acc.mul(&v.pow(c))))
    }
}

/// All characters of `sup` that are trivial on `sub`, one per element of the
/// dual of `sup / sub`.
///
/// With `U·X·V = S` the Smith form of the coordinate matrix `X` of `sub` in
/// `sup`, the quotient is `⊕ Z/d_i` through `y ↦ (U·y mod d_i)`. The character
/// with exponent tuple `(k_i)` sends basis vector `j` of `sup` to
/// `exp(2πi Σ_i k_i·U_ij / d_i)`. Tuples are enumerated lexicographically,
/// so the trivial character comes first.
pub fn characters_extending_trivial(
    sub: &LatticeBasis,
    sup: &LatticeBasis,
) -> Result<Vec<PartialCharacter>> {
    // validates containment and rank
    quotient_invariants(sub, sup)?;
    let x = sup.coordinate_matrix(sub)?;
    let smith = snf(&x);
    let r = sup.rank();
    let factors: Vec<(usize, u64)> = (0..r)
        .filter_map(|i| {
            let d = &smith.s[(i, i)];
            (d > &Int::from(1)).then(|| (i, d.to_u64().expect("quotient order fits in u64")))
        })
        .collect();

    let mut out = Vec::new();
    let mut exps = vec![0u64; factors.len()];
    loop {
        let values = (0..r)
            .map(|j| {
                factors.iter().zip(&exps).fold(RootOfUnity::ONE, |acc, (&(i, d), &k)| {
                    let uij = smith.u[(i, j)].mod_floor(&BigInt::from(d)).to_u64().unwrap();
                    acc.mul(&RootOfUnity::new((k as i128) * (uij as i128), d))
                })
            })
            .collect();
        out.push(PartialCharacter { domain: sup.clone(), values });

        // odometer, last factor fastest
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] < factors[pos].1 {
                break;
            }
            exps[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{kernel_basis, saturation};
    use crate::matrix::int_matrix;

    #[test]
    fn root_arithmetic() {
        let w = RootOfUnity::new(1, 3);
        assert_eq!(w.mul(&w), RootOfUnity::new(2, 3));
        assert!(w.mul(&w).mul(&w).is_one());
        assert_eq!(w.pow(&BigInt::from(-1)), RootOfUnity::new(2, 3));
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity::new(1, 2));
        assert_eq!(RootOfUnity::new(6, 3), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(1, 2).mul(&RootOfUnity::new(1, 3)), RootOfUnity::new(5, 6));
        assert_eq!(w.inverse(), RootOfUnity::new(2, 3));
    }

    #[test]
    fn trivial_character_is_one_everywhere() {
        let l = LatticeBasis::new(int_matrix(&[[1, 0], [-1, 2], [0, -1]])).unwrap();
        let rho = PartialCharacter::trivial(l.clone());
        let u = l.basis().mul_vec(&[Int::from(3), Int::from(-7)]).unwrap();
        assert!(rho.evaluate(&u).unwrap().is_one());
    }

    #[test]
    fn evaluation_is_homomorphic_on_multiples() {
        let l = LatticeBasis::new(int_matrix(&[[1, 0], [-1, 1], [0, -1]])).unwrap();
        let w = RootOfUnity::new(1, 3);
        let rho = PartialCharacter::new(l.clone(), vec![w, RootOfUnity::ONE]).unwrap();
        let u = l.basis().mul_vec(&[Int::from(2), Int::from(0)]).unwrap();
        assert_eq!(rho.evaluate(&u).unwrap(), w.mul(&w));
    }

    #[test]
    fn evaluation_rejects_non_members() {
        let l = LatticeBasis::new(int_matrix(&[[2], [0]])).unwrap();
        let rho = PartialCharacter::trivial(l);
        assert!(matches!(
            rho.evaluate(&[Int::from(1), Int::from(0)]),
            Err(Error::NotInDomain { .. })
        ));
    }

    #[test]
    fn equal_lattices_give_only_trivial() {
        let l = LatticeBasis::new(int_matrix(&[[1], [-1]])).unwrap();
        let chars = characters_extending_trivial(&l, &l).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].is_trivial());
    }

    #[test]
    fn binomial_example_has_three_cube_root_characters() {
        let b = int_matrix(&[[-2, -1, 0], [3, 0, 1], [0, 3, 0], [-1, -2, 0], [0, 0, -1]]);
        let zb = LatticeBasis::new(b.clone()).unwrap();
        let sat = saturation(&zb);
        assert!(sat.same_lattice(&kernel_basis(&int_matrix(&[[1, 1, 1, 1, 1], [0, 1, 2, 3, 1]]))));
        let chars = characters_extending_trivial(&zb, &sat).unwrap();
        assert_eq!(chars.len(), 3);
        assert!(chars[0].is_trivial());
        for rho in &chars {
            for c in b.columns() {
                assert!(rho.evaluate(&c).unwrap().is_one());
            }
            for v in rho.values() {
                assert!(v.order() == 1 || v.order() == 3);
            }
        }
        for rho in &chars[1..] {
            assert!(rho.values().iter().any(|v| v.order() == 3));
        }
        assert_ne!(chars[1], chars[2]);
    }
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::normal_form::{hnf, snf, Hermite};
use crate::error::{Error, Result};
use crate::{Int, IntMat};

/// A sublattice of `Z^n`, given by a basis matrix with linearly independent
/// columns.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    basis: IntMat,
    // Hermite form of the basis, kept for membership tests.
    solver: Hermite<Int>,
}

impl PartialEq for LatticeBasis {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for LatticeBasis {}

impl LatticeBasis {
    /// Wraps `basis` as given. Fails unless the columns are independent.
    pub fn new(basis: IntMat) -> Result<Self> {
        let solver = hnf(&basis);
        if solver.rank != basis.cols() {
            return Err(Error::RankDeficient { rank: solver.rank, cols: basis.cols() });
        }
        Ok(Self { basis, solver })
    }

    /// Lattice spanned by arbitrary (possibly dependent) generators, returned
    /// in canonical form.
    pub fn spanned_by(ambient_dim: usize, generators: &[Vec<Int>]) -> Result<Self> {
        let rows = IntMat::from_columns(ambient_dim, generators)?.transpose();
        Ok(Self::from_row_hermite(ambient_dim, &rows))
    }

    /// The zero lattice in `Z^n`.
    pub fn zero(ambient_dim: usize) -> Self {
        Self::new(IntMat::zeros(ambient_dim, 0)).expect("empty basis is independent")
    }

    fn from_row_hermite(ambient_dim: usize, rows: &IntMat) -> Self {
        let h = hnf(rows);
        let keep: Vec<usize> = (0..h.rank).collect();
        let cols: Vec<usize> = (0..ambient_dim).collect();
        let basis = h.h.select(&keep, &cols).transpose();
        Self::new(basis).expect("nonzero Hermite rows are independent")
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        self.basis.columns()
    }

    /// Unique basis of the same lattice: the nonzero rows of the Hermite form
    /// of the transposed basis.
    pub fn canonical(&self) -> Self {
        Self::from_row_hermite(self.ambient_dim(), &self.basis.transpose())
    }

    pub fn same_lattice(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.rank() == other.rank()
            && self.canonical().basis == other.canonical().basis
    }

    /// Integer coordinates of `v` in this basis, or `None` if `v` is not a
    /// lattice member.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let r = self.rank();
        let w = self.solver.u.mul_vec(v).ok()?;
        if w[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let h = &self.solver.h;
        let mut x = vec![Int::zero(); r];
        for i in (0..r).rev() {
            let mut acc = w[i].clone();
            for j in i + 1..r {
                acc -= &h[(i, j)] * &x[j];
            }
            let (q, rem) = acc.div_rem(&h[(i, i)]);
            if !rem.is_zero() {
                return None;
            }
            x[i] = q;
        }
        Some(x)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of every column of `sub` in this basis.
    pub fn coordinate_matrix(&self, sub: &LatticeBasis) -> Result<IntMat> {
        if sub.ambient_dim() != self.ambient_dim() {
            return Err(Error::Dimension { expected: self.ambient_dim(), got: sub.ambient_dim() });
        }
        let mut cols = Vec::with_capacity(sub.rank());
        for (j, c) in sub.columns().iter().enumerate() {
            cols.push(self.coordinates(c).ok_or(Error::NotContained { column: j })?);
        }
        IntMat::from_columns(self.rank(), &cols)
    }

    /// `[self : sub]` for a full-rank sublattice.
    pub fn index_of(&self, sub: &LatticeBasis) -> Result<Int> {
        check_equal_rank(sub, self)?;
        Ok(self.coordinate_matrix(sub)?.determinant()?.abs())
    }

    pub fn is_saturated(&self) -> bool {
        saturation(self).same_lattice(self)
    }
}

fn check_equal_rank(sub: &LatticeBasis, sup: &LatticeBasis) -> Result<()> {
    if sub.ambient_dim() != sup.ambient_dim() {
        return Err(Error::Dimension { expected: sup.ambient_dim(), got: sub.ambient_dim() });
    }
    if sub.rank() != sup.rank() {
        return Err(Error::RankMismatch { sub: sub.rank(), sup: sup.rank() });
    }
    Ok(())
}

/// `ker_Z(A) = {u ∈ Z^n : A·u = 0}`, in canonical form.
pub fn kernel_basis(a: &IntMat) -> LatticeBasis {
    let n = a.cols();
    let h = hnf(&a.transpose());
    let rows: Vec<usize> = (h.rank..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    let kernel_rows = h.u.select(&rows, &cols);
    LatticeBasis::from_row_hermite(n, &kernel_rows)
}

/// `sat(L) = (Q·L) ∩ Z^n`, computed as the kernel of the orthogonal
/// complement.
pub fn saturation(l: &LatticeBasis) -> LatticeBasis {
    let perp = kernel_basis(&l.basis.transpose());
    kernel_basis(&perp.basis.transpose())
}

/// Invariant factors `d_1 | … | d_r` (all `> 1`) of `sup / sub`.
pub fn quotient_invariants(sub: &LatticeBasis, sup: &LatticeBasis) -> Result<Vec<Int>> {
    check_equal_rank(sub, sup)?;
    let x = sup.coordinate_matrix(sub)?;
    Ok(snf(&x).invariant_factors().into_iter().filter(|d| !d.is_one()).collect())
}

pub(crate) fn primitive(v: &[Int]) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub(crate) fn to_bigints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int_matrix;

    fn big(v: &[i64]) -> Vec<Int> {
        to_bigints(v)
    }

    fn binomial_a() -> IntMat {
        int_matrix(&[[1, 1, 1, 1, 1], [0, 1, 2, 3, 1]])
    }

    fn binomial_b() -> IntMat {
        int_matrix(&[[-2, -1, 0], [3, 0, 1], [0, 3, 0], [-1, -2, 0], [0, 0, -1]])
    }

    #[test]
    fn rank_deficient_rejected() {
        let m = int_matrix(&[[1, 2], [2, 4]]);
        assert!(matches!(LatticeBasis::new(m), Err(Error::RankDeficient { rank: 1, cols: 2 })));
    }

    #[test]
    fn kernel_of_coordinate_sum() {
        let k = kernel_basis(&int_matrix(&[[1, 1, 1, 1]]));
        assert_eq!(k.rank(), 3);
        for c in k.columns() {
            assert_eq!(c.iter().sum::<Int>(), Int::zero());
        }
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = kernel_basis(&int_matrix(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        assert_eq!(k.rank(), 0);
        assert_eq!(k.ambient_dim(), 3);
    }

    #[test]
    fn kernel_contains_binomial_lattice() {
        let k = kernel_basis(&binomial_a());
        assert_eq!(k.rank(), 3);
        for c in binomial_b().columns() {
            assert!(k.contains(&c));
        }
    }

    #[test]
    fn saturation_rescales_primitive() {
        let l = LatticeBasis::new(int_matrix(&[[2], [-2]])).unwrap();
        let s = saturation(&l);
        assert!(s.same_lattice(&LatticeBasis::new(int_matrix(&[[1], [-1]])).unwrap()));
        assert!(saturation(&s).same_lattice(&s));
    }

    #[test]
    fn binomial_saturation_has_index_three() {
        let zb = LatticeBasis::new(binomial_b()).unwrap();
        let sat = saturation(&zb);
        assert!(sat.same_lattice(&kernel_basis(&binomial_a())));
        assert_eq!(sat.index_of(&zb).unwrap(), Int::from(3));
        assert_eq!(quotient_invariants(&zb, &sat).unwrap(), vec![Int::from(3)]);
    }

    #[test]
    fn quotient_trivial_and_doubled() {
        let l = LatticeBasis::new(int_matrix(&[[1, 0], [1, 2], [0, 1]])).unwrap();
        assert!(quotient_invariants(&l, &l).unwrap().is_empty());
        let doubled = LatticeBasis::new(l.basis().map(|x| x * 2)).unwrap();
        assert_eq!(quotient_invariants(&doubled, &l).unwrap(), vec![Int::from(2), Int::from(2)]);
    }

    #[test]
    fn quotient_rejects_non_member() {
        let sup = LatticeBasis::new(int_matrix(&[[2], [0]])).unwrap();
        let sub = LatticeBasis::new(int_matrix(&[[1], [0]])).unwrap();
        assert_eq!(quotient_invariants(&sub, &sup), Err(Error::NotContained { column: 0 }));
    }

    #[test]
    fn coordinates_round_trip() {
        let l = LatticeBasis::new(binomial_b()).unwrap();
        let v = l.basis().mul_vec(&big(&[2, -1, 5])).unwrap();
        assert_eq!(l.coordinates(&v), Some(big(&[2, -1, 5])));
        assert_eq!(l.coordinates(&big(&[1, 0, 0, 0, 0])), None);
    }

    #[test]
    fn primitive_divides_gcd() {
        assert_eq!(primitive(&big(&[4, 6, 0])), big(&[2, 3, 0]));
        assert_eq!(primitive(&big(&[0, 0])), big(&[0, 0]));
    }
}

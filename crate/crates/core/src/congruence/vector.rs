use std::cmp::Ordering;
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::IntMat;

/// A point of `Z^q`; most uses require the coordinates to be nonnegative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Bitmask of the nonzero coordinates among the first 64.
    pub(crate) fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .take(64)
            .enumerate()
            .fold(0, |m, (i, &x)| if x != 0 { m | (1 << i) } else { m })
    }

    /// Canonical traversal order: total degree first, then lexicographically
    /// descending, so `(d, 0, …, 0)` leads its degree.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn sort_canonical(points: &mut [ExponentVector]) {
    points.sort_by(ExponentVector::canonical_cmp);
}

/// All points of `N^dim` with the given total degree, in canonical order.
pub fn points_of_degree(dim: usize, degree: u64) -> Vec<ExponentVector> {
    fn rec(dim: usize, left: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == dim {
            prefix.push(left);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=left).rev() {
            prefix.push(first);
            rec(dim, left - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if dim == 0 {
        if degree == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(dim, degree as i64, &mut Vec::with_capacity(dim), &mut out);
    out
}

/// A nonzero move `w = w₊ − w₋`; usable in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    w: ExponentVector,
    plus: ExponentVector,
    minus: ExponentVector,
}

impl Move {
    pub fn new(w: ExponentVector) -> Self {
        let plus = ExponentVector(w.0.iter().map(|&x| x.max(0)).collect());
        let minus = ExponentVector(w.0.iter().map(|&x| (-x).max(0)).collect());
        Self { w, plus, minus }
    }

    pub fn vector(&self) -> &ExponentVector {
        &self.w
    }

    pub fn plus(&self) -> &ExponentVector {
        &self.plus
    }

    pub fn minus(&self) -> &ExponentVector {
        &self.minus
    }

    /// Both a positive and a negative coordinate.
    pub fn is_mixed(&self) -> bool {
        !self.plus.is_zero() && !self.minus.is_zero()
    }

    /// `max(|w₊|, |w₋|)`: the largest degree shift of a term under the
    /// operator `∂^{w₊} − ∂^{w₋}`.
    pub fn operator_order(&self) -> i64 {
        self.plus.degree().max(self.minus.degree())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSet {
    dim: usize,
    moves: Vec<Move>,
}

impl MoveSet {
    /// Rejects zero moves and dimension mismatches; drops exact duplicates.
    pub fn new(dim: usize, moves: Vec<ExponentVector>) -> Result<Self> {
        let mut out: Vec<Move> = Vec::with_capacity(moves.len());
        for (j, w) in moves.into_iter().enumerate() {
            if w.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: w.dim() });
            }
            if w.is_zero() {
                return Err(Error::ZeroColumn(j));
            }
            if !out.iter().any(|m| m.w == w) {
                out.push(Move::new(w));
            }
        }
        Ok(Self { dim, moves: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn all_mixed(&self) -> bool {
        self.moves.iter().all(Move::is_mixed)
    }
}

/// One move per column of `m`.
pub fn moves_from_columns(m: &IntMat) -> Result<MoveSet> {
    let mut moves = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let col = m.column(j);
        if col.iter().all(Zero::is_zero) {
            return Err(Error::ZeroColumn(j));
        }
        let coords = col
            .iter()
            .map(|x| x.to_i64().ok_or_else(|| Error::Overflow(x.clone())))
            .collect::<Result<Vec<_>>>()?;
        moves.push(ExponentVector(coords));
    }
    MoveSet::new(m.rows(), moves)
}

/// All `v ∈ N^q` with `v = u ± w` for a move `w`, canonical order, no
/// duplicates.
pub fn neighbors(u: &ExponentVector, moves: &MoveSet) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(2 * moves.len());
    for m in &moves.moves {
        for sign in [1i64, -1] {
            let v: Vec<i64> = u.0.iter().zip(&m.w.0).map(|(a, b)| a + sign * b).collect();
            if v.iter().all(|&x| x >= 0) {
                out.push(ExponentVector(v));
            }
        }
    }
    sort_canonical(&mut out);
    out.dedup();
    out
}

/// A monomial ideal of `N^q`, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealSet {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdealSet {
    /// Minimalizes the generators and sorts them canonically.
    pub fn new(dim: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: g.dim() });
            }
            if !g.is_nonnegative() {
                return Err(Error::NegativeExponent(g.0.clone()));
            }
        }
        let mut gens = generators;
        sort_canonical(&mut gens);
        gens.dedup();
        let minimal: Vec<ExponentVector> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && g.dominates(h)))
            .cloned()
            .collect();
        Ok(Self { dim, generators: minimal })
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, generators: Vec::new() }
    }

    /// `⟨x_1^e, …, x_q^e⟩`
    pub fn pure_powers(dim: usize, e: u64) -> Self {
        let gens = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = e as i64;
                ExponentVector(v)
            })
            .collect();
        Self::new(dim, gens).expect("well-formed pure powers")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.generators.iter().any(|g| u.dominates(g))
    }

    /// Whether some generator is a pure power of variable `i` (or is 1).
    pub fn has_pure_power(&self, i: usize) -> bool {
        self.generators
            .iter()
            .any(|g| g.0.iter().enumerate().all(|(j, &x)| j == i || x == 0))
    }

    /// First variable without a pure power in the ideal, if any.
    pub fn missing_pure_power(&self) -> Option<usize> {
        (0..self.dim).find(|&i| !self.has_pure_power(i))
    }

    /// No generator divides another.
    pub fn is_antichain(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators.iter().enumerate().all(|(j, h)| i == j || !g.dominates(h))
        })
    }
}

//! Polynomial and truncated power-series solutions of the constant-coefficient
//! system `I(M)`: one operator `∂^{w₊} − ∂^{w₋}` per column `w` of `M`.
//!
//! Applying the operator to `Σ λ_u x^u` gives, at `x^a`, the coefficient
//! `λ_{a+w₊}·(a+w₊)!/a! − λ_{a+w₋}·(a+w₋)!/a!`. Along every edge of the class
//! graph this fixes the ratio of neighbouring coefficients, so a solution
//! supported on one class is determined by its value at the base point.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::congruence::{
    moves_from_columns, neighbors, points_of_degree, BoundedClassCatalog, ClassReport,
    ExponentVector, MoveSet,
};
use crate::error::{Error, Result};
use crate::scalar::FieldScalar;
use crate::{IntMat, Rational};

/// `Π u_i!`
pub fn factorial(u: &ExponentVector) -> BigInt {
    let mut acc = BigInt::one();
    for &x in u.coords() {
        for k in 2..=x {
            acc *= k;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSolution {
    base_point: ExponentVector,
    coefficients: BTreeMap<ExponentVector, Rational>,
    truncation: Option<u64>,
}

impl SeriesSolution {
    /// Wraps raw coefficients; no solution property is checked.
    pub fn from_terms(
        base_point: ExponentVector,
        coefficients: BTreeMap<ExponentVector, Rational>,
        truncation: Option<u64>,
    ) -> Self {
        Self { base_point, coefficients, truncation }
    }

    pub fn base_point(&self) -> &ExponentVector {
        &self.base_point
    }

    /// `false` for a degree-truncated expansion of an infinite class.
    pub fn is_complete(&self) -> bool {
        self.truncation.is_none()
    }

    pub fn truncation(&self) -> Option<u64> {
        self.truncation
    }

    pub fn coefficient(&self, u: &ExponentVector) -> Option<&Rational> {
        self.coefficients.get(u)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&ExponentVector, &Rational)> {
        let mut t: Vec<_> = self.coefficients.iter().collect();
        t.sort_by(|a, b| a.0.canonical_cmp(b.0));
        t
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.coefficients.keys()
    }
}

fn edge_holds(lu: &Rational, u: &ExponentVector, lv: &Rational, v: &ExponentVector) -> bool {
    lu * Rational::from_integer(factorial(u)) == lv * Rational::from_integer(factorial(v))
}

/// The unique solution supported on the class of `gamma` with `λ_γ = 1`.
///
/// For an unbounded class a truncation degree `D` is required; the support is
/// then the part of the class reachable from `gamma` through points of degree
/// at most `D`. Coefficients are propagated along a spanning tree and every
/// remaining edge is checked.
pub fn solve_class(
    gamma: &ExponentVector,
    m: &IntMat,
    report: &ClassReport,
    truncation: Option<u64>,
) -> Result<SeriesSolution> {
    let moves = moves_from_columns(m)?;
    if gamma.dim() != moves.dim() {
        return Err(Error::Dimension { expected: moves.dim(), got: gamma.dim() });
    }
    let (support, truncation): (HashSet<ExponentVector>, Option<u64>) = match report {
        ClassReport::Bounded { elements } => {
            if !elements.contains(gamma) {
                return Err(Error::ReportMismatch(gamma.coords().to_vec()));
            }
            (elements.iter().cloned().collect(), None)
        }
        ClassReport::UnboundedWitness { path_to_u, .. } => {
            if path_to_u.first() != Some(gamma) {
                return Err(Error::ReportMismatch(gamma.coords().to_vec()));
            }
            let d = truncation.ok_or(Error::TruncationRequired)?;
            if gamma.degree() > d as i64 {
                return Err(Error::Shape(format!(
                    "truncation degree {d} is below the base point degree {}",
                    gamma.degree()
                )));
            }
            (window(gamma, &moves, d), Some(d))
        }
        _ => return Err(Error::ReportMismatch(gamma.coords().to_vec())),
    };
    propagate(gamma, &moves, &support, truncation)
}

fn window(gamma: &ExponentVector, moves: &MoveSet, d: u64) -> HashSet<ExponentVector> {
    let mut seen = HashSet::from([gamma.clone()]);
    let mut queue = VecDeque::from([gamma.clone()]);
    while let Some(u) = queue.pop_front() {
        for v in neighbors(&u, moves) {
            if v.degree() <= d as i64 && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

fn propagate(
    gamma: &ExponentVector,
    moves: &MoveSet,
    support: &HashSet<ExponentVector>,
    truncation: Option<u64>,
) -> Result<SeriesSolution> {
    let mut coeff: HashMap<ExponentVector, Rational> = HashMap::new();
    let mut parent: HashMap<ExponentVector, ExponentVector> = HashMap::new();
    coeff.insert(gamma.clone(), Rational::one());
    let mut queue = VecDeque::from([gamma.clone()]);
    while let Some(u) = queue.pop_front() {
        let lu = coeff[&u].clone();
        let fu = Rational::from_integer(factorial(&u));
        for v in neighbors(&u, moves) {
            if !support.contains(&v) || coeff.contains_key(&v) {
                continue;
            }
            let lv = &lu * &fu / Rational::from_integer(factorial(&v));
            coeff.insert(v.clone(), lv);
            parent.insert(v.clone(), u.clone());
            queue.push_back(v);
        }
    }

    let tree_path = |mut p: ExponentVector| {
        let mut out = vec![p.clone()];
        while let Some(q) = parent.get(&p) {
            out.push(q.clone());
            p = q.clone();
        }
        out.reverse();
        out
    };
    let mut ordered: Vec<&ExponentVector> = coeff.keys().collect();
    ordered.sort_by(|a, b| a.canonical_cmp(b));
    for u in ordered {
        for v in neighbors(u, moves) {
            let Some(lv) = coeff.get(&v) else { continue };
            if !edge_holds(&coeff[u], u, lv, &v) {
                let mut cycle: Vec<Vec<i64>> =
                    tree_path(u.clone()).into_iter().map(ExponentVector::into_coords).collect();
                let mut back = tree_path(v.clone());
                back.reverse();
                cycle.extend(back.into_iter().map(ExponentVector::into_coords));
                return Err(Error::InconsistentCycle { cycle });
            }
        }
    }
    Ok(SeriesSolution {
        base_point: gamma.clone(),
        coefficients: coeff.into_iter().collect(),
        truncation,
    })
}

/// One solution per bounded class, in catalog order: a basis of the
/// polynomial solutions.
pub fn polynomial_basis(m: &IntMat, catalog: &BoundedClassCatalog) -> Result<Vec<SeriesSolution>> {
    catalog.require_complete()?;
    catalog
        .classes()
        .iter()
        .map(|cls| {
            let report = ClassReport::Bounded { elements: cls.elements.clone() };
            solve_class(&cls.representative, m, &report, None)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub annihilated: bool,
    /// Output coefficients checked to vanish.
    pub checked_terms: usize,
    /// Output coefficients skipped because they involve input terms beyond the
    /// truncation degree.
    pub boundary_terms_excluded: usize,
}

/// Applies every operator of `I(M)` to `g` term by term and checks that the
/// result vanishes. For a truncated series, output terms `x^a` with
/// `|a| + max(|w₊|, |w₋|) > D` are excluded and counted.
pub fn verify_solution(m: &IntMat, g: &SeriesSolution) -> Result<Verification> {
    let moves = moves_from_columns(m)?;
    let mut result = Verification { annihilated: true, checked_terms: 0, boundary_terms_excluded: 0 };
    let zero = Rational::zero();
    for mv in moves.moves() {
        let mut targets: Vec<ExponentVector> = Vec::new();
        for u in g.coefficients.keys() {
            for shift in [mv.plus(), mv.minus()] {
                if u.dominates(shift) {
                    targets.push(u.sub(shift));
                }
            }
        }
        targets.sort();
        targets.dedup();
        for a in targets {
            if let Some(d) = g.truncation {
                if a.degree() + mv.operator_order() > d as i64 {
                    result.boundary_terms_excluded += 1;
                    continue;
                }
            }
            let fa = Rational::from_integer(factorial(&a));
            let term = |shift: &ExponentVector| {
                let p = a.add(shift);
                let l = g.coefficients.get(&p).unwrap_or(&zero);
                l * Rational::from_integer(factorial(&p)) / &fa
            };
            result.checked_terms += 1;
            if term(mv.plus()) != term(mv.minus()) {
                result.annihilated = false;
            }
        }
    }
    Ok(result)
}

/// Rank of a sparse matrix given as rows of `(column, value)` pairs.
fn sparse_rank<T: FieldScalar>(rows: Vec<Vec<(usize, T)>>) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for row in rows {
        let mut row: BTreeMap<usize, T> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        while let Some((&lead, lead_val)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, row.into_iter().collect());
                break;
            };
            let f = lead_val.clone() / p[0].1.clone();
            for (c, v) in p {
                let e = row.entry(*c).or_insert_with(T::zero);
                *e = e.clone() - f.clone() * v.clone();
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
    pivots.len()
}

/// Dimension of the space of polynomial solutions of degree at most `D`,
/// computed independently of any class exploration: the nullity of the
/// linear system the operators impose on a general polynomial of degree
/// `<= D`. A class partly above degree `D` forces its coefficients to zero,
/// so this counts the bounded classes lying entirely in degree `<= D`.
pub fn solution_space_dimension_oracle(m: &IntMat, max_degree: u64) -> Result<usize> {
    let moves = moves_from_columns(m)?;
    let q = moves.dim();
    let mut index: HashMap<ExponentVector, usize> = HashMap::new();
    let mut monomials = Vec::new();
    for d in 0..=max_degree {
        for u in points_of_degree(q, d) {
            index.insert(u.clone(), monomials.len());
            monomials.push(u);
        }
    }
    let mut rows = Vec::new();
    for mv in moves.moves() {
        for a in &monomials {
            let fa = BigRational::from_integer(factorial(a));
            let mut row = Vec::with_capacity(2);
            for (shift, sign) in [(mv.plus(), 1), (mv.minus(), -1)] {
                let p = a.add(shift);
                if let Some(&col) = index.get(&p) {
                    let v = BigRational::from_integer(factorial(&p)) / &fa;
                    row.push((col, if sign > 0 { v } else { -v }));
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    Ok(monomials.len() - sparse_rank(rows))
}

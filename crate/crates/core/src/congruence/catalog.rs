//! Inventory of the bounded congruence classes.
//!
//! Points are visited by increasing total degree, canonical order within a
//! degree. The points lying in infinite classes (or in the monomial class)
//! form a monomial ideal, so the bounded points form a downward-closed set.
//! Once every point of some degree `d*` is unbounded, every point of higher
//! degree is too, and the catalog is complete.

use std::collections::HashMap;

use super::explore::{check_ideal, explore, ClassReport, Outcome};
use super::vector::{points_of_degree, ExponentVector, MonomialIdealSet, MoveSet};
use crate::congruence::moves_from_columns;
use crate::error::{Error, Result};
use crate::matrix::int_matrix;

pub const DEFAULT_MAX_DEGREE: u64 = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedClass {
    /// First element in canonical order.
    pub representative: ExponentVector,
    /// All elements, canonical order.
    pub elements: Vec<ExponentVector>,
}

impl BoundedClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_degree(&self) -> i64 {
        self.elements.iter().map(ExponentVector::degree).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every point of this degree (hence of every higher degree) lies in an
    /// unbounded or monomial class.
    CompleteAtDegree(u64),
    /// No certifying degree found up to `max_degree`; `node_cap_hit` is set
    /// when an exploration was cut off by the node cap.
    Incomplete { max_degree: u64, node_cap_hit: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Bounded(usize),
    Infinite,
    Monomial,
}

#[derive(Clone, Debug)]
pub struct BoundedClassCatalog {
    moves: MoveSet,
    ideal: Option<MonomialIdealSet>,
    classes: Vec<BoundedClass>,
    certificate: Certificate,
    labels: HashMap<ExponentVector, Label>,
}

impl PartialEq for BoundedClassCatalog {
    fn eq(&self, other: &Self) -> bool {
        self.moves == other.moves
            && self.ideal == other.ideal
            && self.classes == other.classes
            && self.certificate == other.certificate
    }
}

impl BoundedClassCatalog {
    pub fn dim(&self) -> usize {
        self.moves.dim()
    }

    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    pub fn ideal(&self) -> Option<&MonomialIdealSet> {
        self.ideal.as_ref()
    }

    pub fn classes(&self) -> &[BoundedClass] {
        &self.classes
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.certificate, Certificate::CompleteAtDegree(_))
    }

    pub fn certificate_degree(&self) -> Option<u64> {
        match self.certificate {
            Certificate::CompleteAtDegree(d) => Some(d),
            Certificate::Incomplete { .. } => None,
        }
    }

    /// Index of the bounded class containing `u`, if `u` was catalogued as
    /// bounded. For a complete catalog `None` means `u` is unbounded or lies
    /// in the monomial class.
    pub fn class_of(&self, u: &ExponentVector) -> Option<usize> {
        match self.labels.get(u) {
            Some(Label::Bounded(i)) => Some(*i),
            _ => None,
        }
    }

    /// Whether `u` has been classified as lying in the monomial class.
    pub fn is_monomial(&self, u: &ExponentVector) -> bool {
        matches!(self.labels.get(u), Some(Label::Monomial))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(BoundedClass::len).collect()
    }

    fn incomplete_error(&self) -> Error {
        let max_degree = match self.certificate {
            Certificate::Incomplete { max_degree, .. } => max_degree,
            Certificate::CompleteAtDegree(d) => d,
        };
        Error::IncompleteCatalog { max_degree, classes: self.classes.len() }
    }

    pub(crate) fn require_complete(&self) -> Result<u64> {
        self.certificate_degree().ok_or_else(|| self.incomplete_error())
    }
}

/// Catalogs bounded classes up to total degree `max_degree`.
pub fn bounded_catalog(
    moves: &MoveSet,
    k: Option<&MonomialIdealSet>,
    max_degree: u64,
    node_cap: usize,
) -> Result<BoundedClassCatalog> {
    check_ideal(k, moves.dim())?;
    let q = moves.dim();
    let mut labels: HashMap<ExponentVector, Label> = HashMap::new();
    let mut classes = Vec::new();
    let mut certificate = Certificate::Incomplete { max_degree, node_cap_hit: false };

    'degrees: for d in 0..=max_degree {
        let mut all_unbounded = true;
        for p in points_of_degree(q, d) {
            let label = match labels.get(&p) {
                Some(l) => *l,
                None => {
                    let known = |v: &ExponentVector| {
                        matches!(labels.get(v), Some(Label::Infinite | Label::Monomial))
                    };
                    let ex = explore(&p, moves, k, node_cap, &known);
                    let label = match ex.outcome {
                        Outcome::Absorbed(v) => labels[&v],
                        Outcome::Report(ClassReport::Bounded { elements }) => {
                            let id = classes.len();
                            classes.push(BoundedClass {
                                representative: elements[0].clone(),
                                elements,
                            });
                            Label::Bounded(id)
                        }
                        Outcome::Report(ClassReport::UnboundedWitness { .. }) => Label::Infinite,
                        Outcome::Report(ClassReport::MonomialClass { .. }) => Label::Monomial,
                        Outcome::Report(ClassReport::BudgetExceeded { .. }) => {
                            certificate = Certificate::Incomplete { max_degree: d, node_cap_hit: true };
                            break 'degrees;
                        }
                    };
                    for v in ex.visited {
                        labels.entry(v).or_insert(label);
                    }
                    label
                }
            };
            if matches!(label, Label::Bounded(_)) {
                all_unbounded = false;
            }
        }
        if all_unbounded {
            certificate = Certificate::CompleteAtDegree(d);
            break;
        }
    }

    Ok(BoundedClassCatalog { moves: moves.clone(), ideal: k.cloned(), classes, certificate, labels })
}

/// Minimal generators of the ideal of unbounded (or monomial-class) points.
///
/// These are the points `u` outside every bounded class with `u - e_i`
/// bounded whenever `u_i > 0`; all of them have degree at most `d*`.
pub fn min_gens_unbounded_ideal(catalog: &BoundedClassCatalog) -> Result<MonomialIdealSet> {
    let d_star = catalog.require_complete()?;
    let q = catalog.dim();
    let bounded = |u: &ExponentVector| catalog.class_of(u).is_some();
    let mut gens = Vec::new();
    for d in 0..=d_star {
        for u in points_of_degree(q, d) {
            if bounded(&u) {
                continue;
            }
            let minimal = (0..q).filter(|&i| u.coords()[i] > 0).all(|i| {
                let mut w = u.coords().to_vec();
                w[i] -= 1;
                bounded(&ExponentVector::new(w))
            });
            if minimal {
                gens.push(u);
            }
        }
    }
    MonomialIdealSet::new(q, gens)
}

/// The moves of `[[a, b], [-c, -d]]`.
pub fn moves_2x2(a: i64, b: i64, c: i64, d: i64) -> MoveSet {
    moves_from_columns(&int_matrix(&[[a, b], [-c, -d]])).expect("nonzero columns")
}

fn check_2x2(a: i64, b: i64, c: i64, d: i64) -> Result<()> {
    if [a, b, c, d].iter().any(|&x| x <= 0) {
        return Err(Error::Shape(format!("2x2 entries must be positive, got ({a},{b},{c},{d})")));
    }
    if a * d == b * c {
        return Err(Error::Singular2x2((a * d).into()));
    }
    Ok(())
}

/// Checks that `[[a, b], [-c, -d]]` has exactly `min(ad, bc)` bounded classes,
/// each meeting the box `R` in exactly one point, where `R` is
/// `{s < b, t < c}` if `ad > bc` and `{s < a, t < d}` otherwise.
pub fn verify_representatives_2x2(a: i64, b: i64, c: i64, d: i64) -> Result<bool> {
    check_2x2(a, b, c, d)?;
    let catalog =
        bounded_catalog(&moves_2x2(a, b, c, d), None, DEFAULT_MAX_DEGREE, super::DEFAULT_NODE_CAP)?;
    catalog.require_complete()?;
    let expected = (a * d).min(b * c) as usize;
    if catalog.classes().len() != expected {
        return Ok(false);
    }
    let (s_bound, t_bound) = if a * d > b * c { (b, c) } else { (a, d) };
    let in_box = |p: &ExponentVector| p.coords()[0] < s_bound && p.coords()[1] < t_bound;
    Ok(catalog.classes().iter().all(|cls| cls.elements.iter().filter(|p| in_box(p)).count() == 1))
}

/// Number of bounded classes of `[[a, b], [-c, -d]]`.
pub fn bounded_count_2x2(a: i64, b: i64, c: i64, d: i64) -> Result<usize> {
    check_2x2(a, b, c, d)?;
    let catalog =
        bounded_catalog(&moves_2x2(a, b, c, d), None, DEFAULT_MAX_DEGREE, super::DEFAULT_NODE_CAP)?;
    catalog.require_complete()?;
    Ok(catalog.classes().len())
}

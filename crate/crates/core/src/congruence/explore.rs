//! Breadth-first exploration of a single congruence class.
//!
//! Without a monomial ideal the search needs no degree bound: a finite class
//! is exhausted, and an infinite class contains two comparable points (Dickson's
//! lemma). Two comparable points `v < u` in one class make the class infinite,
//! since `u ~ v` forces `u + k(u - v) ~ v + k(u - v)` for every `k`. The node
//! cap is only a safety valve.

use std::collections::{HashMap, VecDeque};

use super::vector::{neighbors, sort_canonical, ExponentVector, MonomialIdealSet, MoveSet};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassReport {
    /// The whole (finite) class, in canonical order.
    Bounded { elements: Vec<ExponentVector> },
    /// Two class members with `u - v ∈ N^q \ {0}`; each path runs from the
    /// base point to the endpoint along move edges.
    UnboundedWitness {
        u: ExponentVector,
        v: ExponentVector,
        path_to_u: Vec<ExponentVector>,
        path_to_v: Vec<ExponentVector>,
    },
    /// The class meets the monomial ideal, at `touched`.
    MonomialClass { touched: ExponentVector },
    BudgetExceeded { visited: usize, frontier: usize },
}

impl ClassReport {
    pub fn is_bounded(&self) -> bool {
        matches!(self, ClassReport::Bounded { .. })
    }

    pub fn elements(&self) -> Option<&[ExponentVector]> {
        match self {
            ClassReport::Bounded { elements } => Some(elements),
            _ => None,
        }
    }
}

pub(crate) enum Outcome {
    Report(ClassReport),
    /// Reached a point the caller already classified.
    Absorbed(ExponentVector),
}

pub(crate) struct Exploration {
    pub outcome: Outcome,
    pub visited: Vec<ExponentVector>,
}

struct Search<'a> {
    moves: &'a MoveSet,
    points: Vec<ExponentVector>,
    parent: Vec<Option<usize>>,
    index: HashMap<ExponentVector, usize>,
    // visited points bucketed by support; the visited set stays an antichain
    // until the first comparable pair ends the search
    buckets: HashMap<u64, Vec<usize>>,
    wide: bool,
}

impl<'a> Search<'a> {
    fn new(moves: &'a MoveSet) -> Self {
        Self {
            moves,
            points: Vec::new(),
            parent: Vec::new(),
            index: HashMap::new(),
            buckets: HashMap::new(),
            wide: moves.dim() > 64,
        }
    }

    fn insert(&mut self, p: ExponentVector, parent: Option<usize>, track: bool) -> usize {
        let id = self.points.len();
        if track {
            self.buckets.entry(p.support_mask()).or_default().push(id);
        }
        self.index.insert(p.clone(), id);
        self.points.push(p);
        self.parent.push(parent);
        id
    }

    /// The earliest visited point comparable to `x`, with whether `x` is the
    /// larger one. Taking the earliest keeps the witness independent of
    /// bucket iteration order.
    fn comparable(&self, x: &ExponentVector) -> Option<(usize, bool)> {
        let mx = x.support_mask();
        let mut best: Option<(usize, bool)> = None;
        for (&mb, ids) in &self.buckets {
            let below = self.wide || mb & !mx == 0;
            let above = self.wide || mx & !mb == 0;
            if !below && !above {
                continue;
            }
            for &id in ids {
                if best.is_some_and(|(b, _)| b <= id) {
                    // ids within a bucket increase
                    break;
                }
                let y = &self.points[id];
                if below && x.dominates(y) {
                    best = Some((id, true));
                } else if above && y.dominates(x) {
                    best = Some((id, false));
                }
                if best.is_some_and(|(b, _)| b == id) {
                    break;
                }
            }
        }
        best
    }

    fn path(&self, mut id: usize) -> Vec<ExponentVector> {
        let mut out = vec![self.points[id].clone()];
        while let Some(p) = self.parent[id] {
            out.push(self.points[p].clone());
            id = p;
        }
        out.reverse();
        out
    }

    fn path_via(&self, parent: usize, end: &ExponentVector) -> Vec<ExponentVector> {
        let mut p = self.path(parent);
        p.push(end.clone());
        p
    }
}

fn check_point(gamma: &ExponentVector, moves: &MoveSet) -> Result<()> {
    if gamma.dim() != moves.dim() {
        return Err(Error::Dimension { expected: moves.dim(), got: gamma.dim() });
    }
    if !gamma.is_nonnegative() {
        return Err(Error::NegativeExponent(gamma.coords().to_vec()));
    }
    Ok(())
}

pub(crate) fn check_ideal(k: Option<&MonomialIdealSet>, dim: usize) -> Result<()> {
    if let Some(k) = k {
        if k.dim() != dim {
            return Err(Error::Dimension { expected: dim, got: k.dim() });
        }
        if let Some(i) = k.missing_pure_power() {
            return Err(Error::MissingPurePower(i));
        }
    }
    Ok(())
}

pub(crate) fn explore(
    gamma: &ExponentVector,
    moves: &MoveSet,
    k: Option<&MonomialIdealSet>,
    node_cap: usize,
    known: &dyn Fn(&ExponentVector) -> bool,
) -> Exploration {
    let mut s = Search::new(moves);
    // With a monomial ideal containing a power of every variable the
    // complement is finite, so no comparable-pair test is needed.
    let track = k.is_none();
    let done = |s: Search, outcome| Exploration { outcome, visited: s.points };

    if known(gamma) {
        return done(s, Outcome::Absorbed(gamma.clone()));
    }
    if k.is_some_and(|k| k.contains(gamma)) {
        return done(s, Outcome::Report(ClassReport::MonomialClass { touched: gamma.clone() }));
    }
    s.insert(gamma.clone(), None, track);
    let mut queue = VecDeque::from([0usize]);

    while let Some(cur) = queue.pop_front() {
        let nbrs = neighbors(&s.points[cur], s.moves);
        for v in nbrs {
            if s.index.contains_key(&v) {
                continue;
            }
            if known(&v) {
                s.insert(v.clone(), Some(cur), false);
                return done(s, Outcome::Absorbed(v));
            }
            if k.is_some_and(|k| k.contains(&v)) {
                s.insert(v.clone(), Some(cur), false);
                return done(s, Outcome::Report(ClassReport::MonomialClass { touched: v }));
            }
            if track {
                if let Some((other, v_is_larger)) = s.comparable(&v) {
                    let path_v = s.path_via(cur, &v);
                    let path_other = s.path(other);
                    let other_pt = s.points[other].clone();
                    let report = if v_is_larger {
                        ClassReport::UnboundedWitness {
                            u: v.clone(),
                            v: other_pt,
                            path_to_u: path_v,
                            path_to_v: path_other,
                        }
                    } else {
                        ClassReport::UnboundedWitness {
                            u: other_pt,
                            v: v.clone(),
                            path_to_u: path_other,
                            path_to_v: path_v,
                        }
                    };
                    s.insert(v, Some(cur), false);
                    return done(s, Outcome::Report(report));
                }
            }
            if s.points.len() >= node_cap {
                let frontier = queue.len() + 1;
                let visited = s.points.len();
                return done(s, Outcome::Report(ClassReport::BudgetExceeded { visited, frontier }));
            }
            let id = s.insert(v, Some(cur), track);
            queue.push_back(id);
        }
    }
    let mut elements = s.points.clone();
    sort_canonical(&mut elements);
    done(s, Outcome::Report(ClassReport::Bounded { elements }))
}

/// Classifies the congruence class of `gamma` under the moves, with the
/// points of `k` (if given) forming a single absorbing class.
///
/// `k` must contain a pure power of every variable.
pub fn explore_class(
    gamma: &ExponentVector,
    moves: &MoveSet,
    k: Option<&MonomialIdealSet>,
    node_cap: usize,
) -> Result<ClassReport> {
    check_point(gamma, moves)?;
    check_ideal(k, moves.dim())?;
    match explore(gamma, moves, k, node_cap, &|_| false).outcome {
        Outcome::Report(r) => Ok(r),
        Outcome::Absorbed(_) => unreachable!("nothing is pre-classified"),
    }
}

/// Checks the witness contract: `u ≠ v`, `u − v ∈ N^q`, and both paths are
/// valid move paths starting at `gamma`.
pub fn witness_is_valid(gamma: &ExponentVector, moves: &MoveSet, report: &ClassReport) -> bool {
    let ClassReport::UnboundedWitness { u, v, path_to_u, path_to_v } = report else {
        return false;
    };
    let path_ok = |path: &[ExponentVector], end: &ExponentVector| {
        path.first() == Some(gamma)
            && path.last() == Some(end)
            && path.windows(2).all(|w| neighbors(&w[0], moves).contains(&w[1]))
    };
    u != v && u.dominates(v) && path_ok(path_to_u, u) && path_ok(path_to_v, v)
}

//! Mixedness of a column span: `Z·B ∩ N^n = {0}`.
//!
//! `Z·B` meets `N^n \ {0}` iff the rational system `B·x >= 0, 1ᵀB·x = 1` is
//! feasible. The equality is solved for one variable and the remaining
//! inequalities are decided by Fourier–Motzkin elimination; a feasible point
//! is recovered by back-substitution and scaled to a primitive integer
//! witness.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::basis::{kernel_basis, primitive};
use crate::error::{Error, Result};
use crate::{Int, IntMat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mixedness {
    Mixed,
    /// A nonzero vector of `Z·B ∩ N^n`.
    Unmixed(Vec<Int>),
}

impl Mixedness {
    pub fn is_mixed(&self) -> bool {
        matches!(self, Mixedness::Mixed)
    }

    pub fn witness(&self) -> Option<&[Int]> {
        match self {
            Mixedness::Mixed => None,
            Mixedness::Unmixed(w) => Some(w),
        }
    }
}

type Q = BigRational;

/// `a·y >= c`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    a: Vec<Q>,
    c: Q,
}

impl Ineq {
    /// Scale so the first nonzero coefficient has absolute value 1; used for
    /// deduplication.
    fn normalized(mut self) -> Self {
        if let Some(p) = self.a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
            for x in &mut self.a {
                *x = &*x / &p;
            }
            self.c = &self.c / &p;
        }
        self
    }
}

fn eliminate(system: &[Ineq], var: usize) -> Vec<Ineq> {
    let mut out = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for q in system {
        let t = &q.a[var];
        if t.is_positive() {
            pos.push(q);
        } else if t.is_negative() {
            neg.push(q);
        } else {
            out.push(q.clone());
        }
    }
    for p in &pos {
        let sp = p.a[var].clone();
        for n in &neg {
            let sn = -n.a[var].clone();
            let a = p.a.iter().zip(&n.a).map(|(x, y)| x / &sp + y / &sn).collect();
            out.push(Ineq { a, c: &p.c / &sp + &n.c / &sn }.normalized());
        }
    }
    for q in &mut out {
        q.a.truncate(var);
    }
    out.sort();
    out.dedup();
    out
}

fn rank_of(b: &IntMat) -> Result<()> {
    let rank = b.rank();
    if rank != b.cols() {
        return Err(Error::RankDeficient { rank, cols: b.cols() });
    }
    Ok(())
}

pub fn is_mixed_lattice(b: &IntMat) -> Result<Mixedness> {
    rank_of(b)?;
    let (n, m) = b.shape();
    let q = |x: &Int| Q::from_integer(x.clone());
    let sums: Vec<Int> = (0..m).map(|j| b.column(j).iter().sum()).collect();
    let Some(pivot) = sums.iter().position(|s| !s.is_zero()) else {
        // every vector of the span has coordinate sum zero
        return Ok(Mixedness::Mixed);
    };
    let free: Vec<usize> = (0..m).filter(|&j| j != pivot).collect();
    let sp = q(&sums[pivot]);

    // x_pivot = (1 - Σ s_k x_k) / s_pivot
    let mut system: Vec<Ineq> = (0..n)
        .map(|i| {
            let bp = q(&b[(i, pivot)]);
            let a = free.iter().map(|&k| q(&b[(i, k)]) - &bp * q(&sums[k]) / &sp).collect();
            Ineq { a, c: -(&bp / &sp) }
        })
        .collect();

    let mut stages = Vec::with_capacity(free.len());
    for var in (0..free.len()).rev() {
        stages.push(system.clone());
        system = eliminate(&system, var);
    }
    if system.iter().any(|ineq| ineq.c.is_positive()) {
        return Ok(Mixedness::Mixed);
    }
    stages.reverse();

    let mut y: Vec<Q> = Vec::with_capacity(free.len());
    for (var, stage) in stages.iter().enumerate() {
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for ineq in stage {
            let t = &ineq.a[var];
            if t.is_zero() {
                continue;
            }
            let rest: Q = ineq.a[..var].iter().zip(&y).map(|(a, v)| a * v).sum();
            let bound = (&ineq.c - rest) / t;
            if t.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        y.push(lower.or(upper).unwrap_or_else(Q::zero));
    }

    let mut x = vec![Q::zero(); m];
    let mut acc = Q::one();
    for (&k, v) in free.iter().zip(&y) {
        acc -= q(&sums[k]) * v;
        x[k] = v.clone();
    }
    x[pivot] = acc / sp;

    let denom = x.iter().fold(Int::one(), |l, v| l.lcm(v.denom()));
    let xi: Vec<Int> = x.iter().map(|v| (v * Q::from_integer(denom.clone())).to_integer()).collect();
    let w = primitive(&b.mul_vec(&xi)?);
    debug_assert!(w.iter().all(|c| !c.is_negative()) && w.iter().any(|c| !c.is_zero()));
    Ok(Mixedness::Unmixed(w))
}

/// An integer matrix `A` with `A·B = 0` whose `n - m` rows span the saturated
/// lattice `ker_Z(Bᵀ)`; rows are in Hermite normal form.
pub fn cokernel_matrix(b: &IntMat) -> Result<IntMat> {
    rank_of(b)?;
    Ok(kernel_basis(&b.transpose()).basis().transpose())
}

//! Zero-block decompositions of a lattice basis matrix.
//!
//! After permuting rows and columns, `B = [[N, B_J], [M, 0]]` where `M` is a
//! mixed `q × p` block on the rows outside `J`. Each such decomposition, with a
//! character extending the trivial one on `Z·B_J`, names a candidate
//! associated prime of `I(B)`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    characters_extending_trivial, is_mixed_lattice, saturation, LatticeBasis, Mixedness,
    PartialCharacter,
};
use crate::IntMat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Rows of `M`, increasing.
    pub rows_m: Vec<usize>,
    /// Columns of `M`, increasing.
    pub cols_m: Vec<usize>,
    /// Complement of `rows_m`.
    pub j: Vec<usize>,
    pub m_block: IntMat,
}

/// Whether a decomposition passed the torality test. The irreducibility
/// condition that singles out actual associated primes is not checked, so
/// both kinds are candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateStatus {
    ToralVerified,
    UnverifiedCandidate,
}

impl CandidateStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CandidateStatus::ToralVerified => "toral-verified",
            CandidateStatus::UnverifiedCandidate => "unverified candidate",
        }
    }
}

impl BlockDecomposition {
    pub fn q(&self) -> usize {
        self.rows_m.len()
    }

    pub fn p(&self) -> usize {
        self.cols_m.len()
    }

    /// Columns of `B` outside `M`.
    pub fn cols_j(&self, total_cols: usize) -> Vec<usize> {
        (0..total_cols).filter(|c| !self.cols_m.contains(c)).collect()
    }

    /// `B_J`: rows `J`, columns outside `M`.
    pub fn b_j(&self, b: &IntMat) -> IntMat {
        b.select(&self.j, &self.cols_j(b.cols()))
    }

    pub fn status(&self) -> CandidateStatus {
        if toral_filter(self) {
            CandidateStatus::ToralVerified
        } else {
            CandidateStatus::UnverifiedCandidate
        }
    }
}

fn column_is_mixed(m: &IntMat, j: usize) -> bool {
    let col = m.column(j);
    col.iter().any(Signed::is_positive) && col.iter().any(Signed::is_negative)
}

/// Checks that `B` can serve as a lattice basis matrix: full column rank and
/// `Z·B` mixed. A square `B` spans a finite-index sublattice of `Z^n`, which
/// always meets `N^n`; there only the columns are required to be mixed.
pub(crate) fn check_lattice_basis(b: &IntMat) -> Result<()> {
    match is_mixed_lattice(b)? {
        Mixedness::Mixed => Ok(()),
        Mixedness::Unmixed(_) if b.is_square() && (0..b.cols()).all(|c| column_is_mixed(b, c)) => {
            Ok(())
        }
        Mixedness::Unmixed(witness) => Err(Error::NotMixed { witness }),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All decompositions with `M` mixed and `q <= p`, ordered by `q` and then
/// lexicographically by `rows_m`. The first entry is always the `q = 0`
/// decomposition. Given `rows_m`, the columns of `M` are forced: they are
/// the columns with a nonzero entry in those rows (any further column would
/// be zero on `rows_m`, hence not mixed).
pub fn block_decompositions(b: &IntMat) -> Result<Vec<BlockDecomposition>> {
    check_lattice_basis(b)?;
    let (n, m) = b.shape();
    let mut out = vec![BlockDecomposition {
        rows_m: Vec::new(),
        cols_m: Vec::new(),
        j: (0..n).collect(),
        m_block: IntMat::zeros(0, 0),
    }];
    for q in 2..=n {
        for rows_m in combinations(n, q) {
            let cols_m: Vec<usize> =
                (0..m).filter(|&c| rows_m.iter().any(|&r| !b[(r, c)].is_zero())).collect();
            if cols_m.len() < q {
                continue;
            }
            let m_block = b.select(&rows_m, &cols_m);
            if !(0..m_block.cols()).all(|c| column_is_mixed(&m_block, c)) {
                continue;
            }
            let j = (0..n).filter(|r| !rows_m.contains(r)).collect();
            out.push(BlockDecomposition { rows_m, cols_m, j, m_block });
        }
    }
    Ok(out)
}

/// Toral iff `q = 0`, or `M` is square with nonzero determinant.
pub fn toral_filter(dec: &BlockDecomposition) -> bool {
    if dec.q() == 0 {
        return true;
    }
    dec.m_block.is_square() && dec.m_block.determinant().is_ok_and(|d| !d.is_zero())
}

/// Characters of `sat(Z·B_J) ⊆ Z^J` that are trivial on `Z·B_J`.
pub fn characters_for_decomposition(
    b: &IntMat,
    dec: &BlockDecomposition,
) -> Result<Vec<PartialCharacter>> {
    let zb_j = LatticeBasis::new(dec.b_j(b))?;
    let sat = saturation(&zb_j);
    characters_extending_trivial(&zb_j, &sat)
}

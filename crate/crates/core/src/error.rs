use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix does not have full column rank (rank {rank} of {cols} columns)")]
    RankDeficient { rank: usize, cols: usize },

    #[error("lattices have different ranks ({sub} and {sup})")]
    RankMismatch { sub: usize, sup: usize },

    #[error("basis column {column} of the sublattice is not in the superlattice")]
    NotContained { column: usize },

    #[error("vector {vector:?} is not in the character domain")]
    NotInDomain { vector: Vec<BigInt> },

    #[error("column span contains the nonzero nonnegative vector {witness:?}")]
    NotMixed { witness: Vec<BigInt> },

    #[error("column {0} is zero")]
    ZeroColumn(usize),

    #[error("entry {0} does not fit in a 64-bit exponent")]
    Overflow(BigInt),

    #[error("vector {0:?} has a negative coordinate")]
    NegativeExponent(Vec<i64>),

    #[error("monomial ideal has no pure power of variable {0}")]
    MissingPurePower(usize),

    #[error("class exploration exceeded the node cap ({visited} visited, {frontier} queued)")]
    BudgetExceeded { visited: usize, frontier: usize },

    #[error("bounded class catalog is incomplete up to degree {max_degree} ({classes} classes found)")]
    IncompleteCatalog { max_degree: u64, classes: usize },

    #[error("ad = bc = {0}: the 2x2 matrix is singular")]
    Singular2x2(BigInt),

    #[error("decomposition is not toral")]
    NotToral,

    #[error("class report does not contain the base point {0:?}")]
    ReportMismatch(Vec<i64>),

    #[error("a truncation degree is required to expand an unbounded class")]
    TruncationRequired,

    #[error("coefficient propagation is inconsistent along the cycle {cycle:?}")]
    InconsistentCycle { cycle: Vec<Vec<i64>> },
}

impl Error {
    /// Stable module-qualified code used in machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Shape(_) => "lattice.shape",
            Error::Dimension { .. } => "lattice.dimension",
            Error::RankDeficient { .. } => "lattice.rank-deficient",
            Error::RankMismatch { .. } => "lattice.rank-mismatch",
            Error::NotContained { .. } => "lattice.not-contained",
            Error::NotInDomain { .. } => "lattice.not-in-domain",
            Error::NotMixed { .. } => "lattice.not-mixed",
            Error::ZeroColumn(_) => "congruence.zero-move",
            Error::Overflow(_) => "congruence.overflow",
            Error::NegativeExponent(_) => "congruence.negative-exponent",
            Error::MissingPurePower(_) => "congruence.missing-pure-power",
            Error::BudgetExceeded { .. } => "congruence.budget-exceeded",
            Error::IncompleteCatalog { .. } => "congruence.incomplete",
            Error::Singular2x2(_) => "congruence.singular-2x2",
            Error::NotToral => "ideals.not-toral",
            Error::ReportMismatch(_) => "series.report-mismatch",
            Error::TruncationRequired => "series.truncation-required",
            Error::InconsistentCycle { .. } => "series.inconsistent-cycle",
        }
    }
}

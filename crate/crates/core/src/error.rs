use thiserror::Error;

/// Errors shared across the library.
///
/// The split into input / undecided / internal matters to callers: invalid
/// input and "ran out of budget" are expected outcomes of exact desk-scale
/// search, an internal invariant breach is a bug.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field too large: order {0} exceeds the table limit {1}")]
    FieldTooLarge(u64, u64),

    #[error("operands belong to different fields ({0} vs {1})")]
    MixedFields(String, String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,

    #[error("constant term must be nonzero: {0}")]
    ZeroConstantTerm(String),

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generators have gcd {0} != 1; not a numerical monoid")]
    NonCoprimeGenerators(u64),

    #[error("generator {0:?} has a negative coordinate among the first {1}")]
    NegativePureCoordinate(Vec<i64>, usize),

    #[error("generators span a proper sublattice of Z^{rank}: elementary divisors {divisors:?}")]
    LatticeDeficient { rank: usize, divisors: Vec<u64> },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("undecided within budget: {0}")]
    Undecided(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("size overflow: {0}")]
    SizeOverflow(String),

    #[error("{0:?} is not a submonoid of the target monoid (generator {1} missing)")]
    NotSubmonoid(Vec<u64>, u64),

    #[error("input rejected: monoid is in the non-constructive branch ({0})")]
    NonConstructiveBranch(String),

    #[error("witness precondition failed: {0}")]
    GateFailed(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Coarse classification used by front ends to pick exit codes.
    pub fn exit_class(&self) -> ExitClass {
        match self {
            Error::Undecided(_) | Error::BudgetExhausted(_) => ExitClass::Undecided,
            Error::Internal(_) => ExitClass::Internal,
            _ => ExitClass::InvalidInput,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    InvalidInput,
    Undecided,
    Internal,
}

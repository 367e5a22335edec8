use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("malformed polynomial `{input}`: {reason}")]
    MalformedPolynomial { input: String, reason: String },
    #[error("malformed element `{input}`: {reason}")]
    MalformedElement { input: String, reason: String },
    #[error("zero row: hyperplane {0} has an all-zero defining row")]
    ZeroRow(usize),
    #[error("hyperplane {0} has no affine part (it is the hyperplane at infinity)")]
    NoAffinePart(usize),
    #[error("arrangement does not contain {0} linearly independent hyperplanes")]
    NotEssential(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index set {set} is invalid: {reason}")]
    BadIndexSet { set: String, reason: String },
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("not a degeneration: {0} is dependent in the base type but not in the degeneration")]
    NotADegeneration(String),
    #[error("not a Terao degeneration of this circuit: {0}")]
    NotTeraoDegeneration(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("ideal invariance fails: {0}")]
    IdealInvarianceFailure(String),
    #[error("cochain check fails: {0}")]
    CochainFailure(String),
    #[error("weights are resonant: {0}")]
    Resonant(String),
    #[error("projection is not full row rank (rank {rank} < {rows} rows)")]
    NotFullRowRank { rank: usize, rows: usize },
    #[error("no exact solution: {0}")]
    NoSolution(String),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

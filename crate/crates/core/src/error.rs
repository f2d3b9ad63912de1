use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("invalid context n={n}, k={k}")]
    InvalidContext { n: usize, k: usize },
    #[error("{parts:?} is not in the alcove for n={n}, k={k}")]
    NotInAlcove { parts: Vec<usize>, n: usize, k: usize },
    #[error("{parts:?} does not fit in the {k}x{rest} box")]
    NotBoxed { parts: Vec<usize>, k: usize, rest: usize },
    #[error("context mismatch: (n={0}, k={1}) against (n={2}, k={3})")]
    ContextMismatch(usize, usize, usize, usize),
    #[error("window {0:?} has repeated residues modulo its rank")]
    WindowResidues(Vec<i64>),
    #[error("window {0:?} has entry sum not congruent to k(k-1)/2 modulo k")]
    WindowSum(Vec<i64>),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("size mismatch: {0} against {1}")]
    SizeMismatch(usize, usize),
    #[error("division by zero in the cyclotomic field of order {0}")]
    DivisionByZero(usize),
    #[error("cyclotomic value {0} is not an integer")]
    NotInteger(String),
    #[error("degree {0} must be non-negative")]
    NegativeDegree(i64),
    #[error("entry {0} violates the degree law for n={1}")]
    DegreeLaw(String, usize),
    #[error("malformed table data: {0}")]
    Table(String),
    #[error("rank k={k} exceeds level n={n}")]
    RankExceedsLevel { n: usize, k: usize },
    #[error("unknown suite {name:?}; available: {available}")]
    UnknownSuite { name: String, available: String },
}

pub type Result<T> = std::result::Result<T, Error>;

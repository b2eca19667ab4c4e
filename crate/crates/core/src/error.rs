use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("variable spaces differ: [{0}] vs [{1}]")]
    VarSpaceMismatch(String, String),
    #[error("variable {0} has no assignment")]
    Unassigned(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("trace form is degenerate")]
    DegenerateForm,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("expected homogeneous polynomial of degree {expected}, got {got}")]
    DegreeMismatch { expected: i64, got: String },
    #[error("length mismatch: l(w) = {lw}, l(u) + l(v) = {luv}")]
    LengthMismatch { lw: usize, luv: usize },
    #[error("class {class} is not supported on W^P for node {node}: {word:?}")]
    NotParabolic { class: String, node: usize, word: Vec<usize> },
    #[error("polynomial is not invariant under s_{j}")]
    NotInvariant { j: usize },
    #[error("no tabulated case {group} r={r}")]
    UnknownCase { group: String, r: usize },
    #[error("refused: {0}")]
    CostGuard(String),
    #[error("checksum mismatch for {file}: expected {expected}, got {got}")]
    Checksum { file: String, expected: String, got: String },
    #[error("degree {degree} exceeds truncation {trunc}")]
    Truncation { degree: usize, trunc: usize },
    #[error("Hilbert function mismatch in degree {degree}: ring {ring}, expected {expected}")]
    Hilbert { degree: usize, ring: usize, expected: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

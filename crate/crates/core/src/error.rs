use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("algebra {0} has no R-matrix")]
    MissingRMatrix(String),
    #[error("algebra {0} has no pivot")]
    MissingPivot(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("functor presentation error: {0}")]
    Presentation(String),
    #[error("family is not dinatural: {0}")]
    NotDinatural(String),
    #[error("family is not natural: {0}")]
    NotNatural(String),
    #[error("pairing is degenerate (rank {rank} < {dim})")]
    DegeneratePairing { rank: usize, dim: usize },
    #[error("functor is not left exact: {0}")]
    NotLeftExact(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("sewing mismatch: {0}")]
    SewingMismatch(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

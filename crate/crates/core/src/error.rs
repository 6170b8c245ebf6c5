use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix columns are linearly dependent (rank {rank} < {cols} columns)")]
    ColumnRankDeficient { rank: usize, cols: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("unknown arrow {0}")]
    UnknownArrow(String),

    #[error("arrow {arrow} cannot be paired with a relation from {source_vertex} to {target_vertex}")]
    IncompatiblePairing {
        arrow: String,
        source_vertex: String,
        target_vertex: String,
    },

    #[error("potential has vanishing derivative along arrow {0}")]
    DegeneratePotential(String),

    #[error("stability parameter is not generic: subset {0:?} has zero weight")]
    NonGenericTheta(Vec<usize>),

    #[error("character lies in the span of the weight rows {0:?}")]
    NonGenericCharacter(Vec<usize>),

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: &'static str },

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("zero coefficient at cyclic path {0}")]
    ZeroCoefficient(usize),

    #[error("mutation chain mismatch at stage {stage}, position {position}: {detail}")]
    ChainMismatch {
        stage: String,
        position: usize,
        detail: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

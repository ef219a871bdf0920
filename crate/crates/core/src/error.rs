use thiserror::Error;

/// Errors raised by parsing, graph queries and the eigensolver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptyInput,

    /// `position` is 1-based, counted in characters.
    #[error("invalid character {found:?} at position {position}")]
    InvalidChar { position: usize, found: char },

    #[error("malformed run-length token {token:?} at position {position}")]
    BadToken { position: usize, token: String },

    #[error("vertex index {index} out of range 1..={n}")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("vertex pair ({0}, {0}) is not an edge candidate")]
    SamePair(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: matrix of order {matrix} vs {blocks} block sizes")]
    DimensionMismatch { matrix: usize, blocks: usize },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}

impl Error {
    /// True for failures of the numerical kernels, false for bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors raised by the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("inconsistent Bloch geometry: {0}")]
    InconsistentGeometry(String),

    #[error("triad phase undefined: {0}")]
    UndefinedPhase(String),

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("internal consistency violated: {0}")]
    Consistency(String),

    #[error("unknown figure id `{0}`")]
    UnknownFigure(String),

    #[error("cannot parse {what}: {reason}")]
    Parse { what: String, reason: String },

    #[error("cannot write `{path}`: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

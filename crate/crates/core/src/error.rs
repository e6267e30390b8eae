use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("degenerate torus basis: det(a1, a2) = 0")]
    DegenerateTorus,

    #[error("qubit count {0} must be even and at least 2")]
    InvalidQubitCount(usize),

    #[error("no non-constant term has a primitive exponent pair")]
    NoPrimitiveTerm,

    #[error("the code encodes no logical qubits")]
    NoLogicals,

    #[error("trial count must be positive")]
    ZeroTrials,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("transversal {0} does not preserve the stabilizer group")]
    GateNotPreserving(&'static str),

    #[error("determinant ad - bc vanishes; the ideal is not zero-dimensional")]
    ZeroDelta,

    #[error("cannot select from an empty record set")]
    EmptyRecords,

    #[error("unknown table row {0}")]
    UnknownRow(String),

    #[error("existing output was produced with a different configuration (manifest {0})")]
    ManifestMismatch(String),

    #[error("invalid distance policy {0:?}")]
    BadPolicy(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

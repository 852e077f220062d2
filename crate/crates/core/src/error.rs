use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Variants carry the measured
/// violation so error messages say how far off the input was.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPsd { eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("state is not normalized (squared norm {norm_sqr:.12})")]
    NotNormalized { norm_sqr: f64 },

    #[error("trace is not one (trace {trace:.12})")]
    TraceNotOne { trace: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("channel parameter p={p} lies outside [0, 1]")]
    POutOfRange { p: f64 },

    #[error("kraus elements violate completeness (max deviation {deviation:.3e})")]
    IncompleteChannel { deviation: f64 },

    #[error("unknown channel family '{name}'")]
    UnknownChannelFamily { name: String },

    #[error("unknown bell state '{name}'")]
    UnknownBellState { name: String },

    #[error("{name}={value} lies outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("need at least 2 paired observations, got {n}")]
    TooFewPoints { n: usize },

    #[error("paired sample lengths differ: {xs} vs {ys}")]
    LengthMismatch { xs: usize, ys: usize },

    #[error("non-finite value at position {index}")]
    NonFinite { index: usize },

    #[error("sweep needs at least 2 p values, got {num_p}")]
    TooFewSteps { num_p: usize },

    #[error("ensemble needs at least 1 state, got {num_states}")]
    TooFewStates { num_states: usize },

    #[error("internal inconsistency in {what} (delta {delta:.3e})")]
    Inconsistent { what: &'static str, delta: f64 },

    #[error("evaluation failed at p={p}: {source}")]
    AtP { p: f64, source: Box<Error> },

    #[error("evaluation failed for state {index}: {source}")]
    AtState { index: u64, source: Box<Error> },

    #[error("state file is neither a pure state nor a density matrix: {detail}")]
    MalformedStateFile { detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn at_p(self, p: f64) -> Self {
        Error::AtP { p, source: Box::new(self) }
    }

    pub fn at_state(self, index: u64) -> Self {
        Error::AtState { index, source: Box::new(self) }
    }
}

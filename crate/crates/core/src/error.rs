use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("timestamps must be strictly increasing (sample {index})")]
    NonIncreasingTime { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("non-finite value in sample {index}")]
    NonFiniteValue { index: usize },
    #[error("a trace needs at least 2 samples, found {found}")]
    TooFewSamples { found: usize },
    #[error("a point needs at least one coordinate")]
    EmptyPoint,
    #[error("curve parameter {param} outside the domain [0, {max}]")]
    OutOfDomain { param: f64, max: usize },
    #[error("delta must be non-negative, got {0}")]
    NegativeDelta(f64),
    #[error("window must be at least 1")]
    InvalidWindow,
    #[error("minimization domain is empty")]
    EmptyDomain,
    #[error("time segment has equal endpoint timestamps")]
    DegenerateTimeSegment,
    #[error("no monotone path through the free space at this delta")]
    NoWitness,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

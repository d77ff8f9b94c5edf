use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("polynomial is not homogeneous: term {first} has degree {first_degree}, term {second} has degree {second_degree}")]
    NotHomogeneous {
        first: String,
        first_degree: String,
        second: String,
        second_degree: String,
    },
    #[error("every section vanishes at {0}")]
    BaseLocusHit(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("subset sums clash: I = {i:?}, J = {j:?}")]
    SubsetSumClash { i: Vec<usize>, j: Vec<usize> },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("decoder failed: {0}")]
    Decode(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

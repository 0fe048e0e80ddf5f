use thiserror::Error;

use crate::algebra::LeibnizViolation;
use crate::omni::OmniRepViolation;
use crate::rep::RepViolation;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("not a Leibniz algebra: {0}")]
    NotLeibniz(LeibnizViolation),
    #[error("not a representation: {0}")]
    InvalidRep(RepViolation),
    #[error("not an omni-representation: {0}")]
    InvalidOmniRep(OmniRepViolation),
    #[error("not an embedding tensor: [phi(u_{0}), phi(u_{1})] != phi(phi(u_{0}) u_{1})")]
    NotEmbeddingTensor(usize, usize),
    #[error("image of rho is not contained in the graph of phi at basis element e_{0}")]
    NotInGraph(usize),
    #[error("{what} out of range: {value} (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("cochain space too large: {coefficients} coefficients exceeds limit {limit}")]
    TooLarge { coefficients: usize, limit: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("no catalog entry named {0:?}")]
    NotFound(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors that signal a failed mathematical check rather than bad input.
    pub fn is_math_failure(&self) -> bool {
        matches!(
            self,
            Error::NotLeibniz(_)
                | Error::InvalidRep(_)
                | Error::InvalidOmniRep(_)
                | Error::NotEmbeddingTensor(..)
                | Error::NotInGraph(_)
                | Error::Invariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

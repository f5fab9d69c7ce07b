use thiserror::Error;

use crate::webgraph::Violation;
use crate::weightpath::SignStateString;

/// A malformed text input (sign/state string, web file, polynomial).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// The half-edge/vertex tables do not describe a graph at all.
    #[error("malformed web: {0}")]
    Structure(String),

    #[error("invalid web: {}", format_violations(.0))]
    InvalidWeb(Vec<Violation>),

    #[error("sign/state string `{0}` is not dominant")]
    NotDominant(SignStateString),

    #[error("no growth rule applies to frontier `{0}`")]
    Stuck(SignStateString),

    #[error("growth of `{0}` exceeded its step limit")]
    StepLimit(SignStateString),

    #[error("web has a boundary vertex of degree {degree} at position {vertex}; expected degree 1")]
    NotUnclasped { vertex: usize, degree: usize },

    #[error("clasp: {0}")]
    Clasp(String),

    #[error("trim: {0}")]
    Trim(String),

    #[error("web has no proper edge coloring")]
    NoColoring,

    #[error("inconsistent edge labels: {0}")]
    LabelConflict(String),

    #[error("colorings belong to different webs")]
    ColoringMismatch,

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("monomial does not match the signature: {0}")]
    SignatureMismatch(String),

    #[error("expansion failed: {0}")]
    Expansion(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

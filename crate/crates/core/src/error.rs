use std::fmt;

use crate::poset::Diagnostic;

/// Errors produced by poset construction, invariant computation and analysis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit: {what} needs {requested}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("invalid poset: {}", DiagList(.0))]
    InvalidPoset(Vec<Diagnostic>),

    #[error("glue mismatch at rank {rank}: part {part} has {found} elements, expected {expected}")]
    GlueMismatch {
        rank: usize,
        part: usize,
        expected: usize,
        found: usize,
    },

    #[error("glue inconsistent: parts {first} and {second} disagree on comparability between ranks {lower} and {upper}")]
    GlueInconsistent {
        first: usize,
        second: usize,
        lower: usize,
        upper: usize,
    },

    #[error("not cd-expressible: L-vector entry at non-even set {set} is {value}")]
    NotCdExpressible { set: String, value: String },

    #[error("non-integral cd coefficient {value} for word {word}")]
    NonIntegral { word: String, value: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

struct DiagList<'a>(&'a [Diagnostic]);

impl fmt::Display for DiagList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

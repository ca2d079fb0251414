use std::fmt;

use crate::fractional::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed graph6 data.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// Malformed line-oriented text input (edge lists, hypergraphs, plane graphs).
    #[error("parse error on line {line}: {message}")]
    Text { line: usize, message: String },

    #[error("input error: {0}")]
    Input(String),

    /// The operation is undefined for this input (for instance an isolated vertex).
    #[error("domain error: {0}")]
    Domain(String),

    /// A search or enumeration ran out of budget. The answer is unknown;
    /// `lower_bound`, when present, is a verified bound and not a value.
    #[error("{what} exceeded its cap of {cap}{}", BoundSuffix(.lower_bound))]
    CapExceeded {
        what: &'static str,
        cap: u64,
        lower_bound: Option<Rational>,
    },

    /// Exhaustive search needs vertex sets that fit a 128-bit mask.
    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    /// Something a cited theorem guarantees did not happen. Either the input
    /// violates the theorem's hypotheses or there is a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// The input is an explicitly excepted case of the underlying theorem.
    #[error("excepted graph: {0}")]
    Excepted(String),
}

struct BoundSuffix<'a>(&'a Option<Rational>);

impl fmt::Display for BoundSuffix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(b) => write!(f, " (verified lower bound {b})"),
            None => Ok(()),
        }
    }
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn text(line: usize, msg: impl Into<String>) -> Self {
        Error::Text {
            line,
            message: msg.into(),
        }
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub(crate) fn with_lower_bound(self, bound: Rational) -> Self {
        match self {
            Error::CapExceeded { what, cap, .. } => Error::CapExceeded {
                what,
                cap,
                lower_bound: Some(bound),
            },
            other => other,
        }
    }
}

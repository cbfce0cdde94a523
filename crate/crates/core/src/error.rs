use std::fmt;

use thiserror::Error;

/// One broken invariant of a [`SurfaceProfile`](crate::SurfaceProfile).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: &'static str,
    pub rule: String,
}

impl Violation {
    pub(crate) fn new(field: &'static str, rule: impl Into<String>) -> Self {
        Violation { field, rule: rule.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid profile: {}", join(.0))]
    InvalidProfile(Vec<Violation>),

    #[error("profile violates Smith theory; not realizable: {0}")]
    SmithViolation(String),

    #[error("profile is not realizable: {0}")]
    Unrealizable(String),

    #[error("missing Hodge numbers: {0} needs (h10, h20, h11)")]
    MissingHodge(&'static str),

    #[error("hypotheses not met for {op}: {reason}")]
    NotApplicable { op: &'static str, reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("involution is not regular ({0}); apply a barycentric subdivision first")]
    NonRegularInvolution(String),

    #[error("resource budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget { what: &'static str, needed: u64, budget: u64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

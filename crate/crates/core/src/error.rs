use thiserror::Error;

use crate::frontend::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// The Weierstrass data itself is malformed (p = 0, q = 0 or p = q).
    #[error("invalid Weierstrass data: {0}")]
    Validation(String),

    #[error("unsupported surface: fiber over place {place} is unstable (a = {a}, b = {b}; additive reduction)")]
    UnstableFiber { place: String, a: u32, b: u32 },

    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),

    #[error(
        "inapplicable model: m = max(deg p, deg q) = {m} is odd, so the chart Y = s^(3m/2) y, X = s^m x \
         at infinity is not defined over the base"
    )]
    InapplicableModel { m: usize },

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("anomaly: {0}")]
    Anomaly(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable machine-readable code, used in json reports and by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "degenerate_input",
            Error::Precondition(_) => "precondition",
            Error::InvariantViolation(_) => "invariant_violation",
            Error::Validation(_) => "validation",
            Error::UnstableFiber { .. } | Error::UnsupportedSurface(_) => "unsupported_surface",
            Error::InapplicableModel { .. } => "inapplicable_model",
            Error::WrongCase(_) => "wrong_case",
            Error::Anomaly(_) => "anomaly",
            Error::Parse(_) => "parse_error",
        }
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::DegenerateInput(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}

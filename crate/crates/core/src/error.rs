//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by series, operator, and system constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Composition `f(g)` requires `g(0) = 0`.
    #[error("inner series has nonzero constant term; composition requires g(0) = 0")]
    NonzeroConstantTerm,

    /// Reciprocal requires a nonzero constant term.
    #[error("series has zero constant term and cannot be inverted multiplicatively")]
    ZeroConstantTerm,

    /// Compositional inversion requires `f(0) = 0` and `f'(0) != 0`.
    #[error("series is not compositionally invertible: {0}")]
    NotInvertible(&'static str),

    /// A truncated series does not carry enough coefficients for the request.
    #[error("series order {actual} is too low; the operation needs order >= {required}")]
    OrderTooLow { required: usize, actual: usize },

    /// An analytic germ was applied to a series with the wrong constant term.
    #[error("analytic function requires constant term {expected}, found {found}")]
    BadConstantTerm { expected: &'static str, found: String },

    /// The symbol does not satisfy `V(0) = 0`, `V'(0) != 0`.
    #[error("symbol is not canonical: {0}")]
    NotCanonical(&'static str),

    /// A parametric system was built without its parameter.
    #[error("system `{0}` requires a parameter")]
    MissingParam(&'static str),

    /// A parameter was supplied to a parameter-free system.
    #[error("system `{0}` takes no parameter")]
    UnexpectedParam(&'static str),

    /// The Gegenbauer parameter must be nonzero (`V'(0) = 2a`).
    #[error("gegenbauer parameter must be nonzero")]
    ZeroAlpha,

    /// The Jacobian of a multivariate symbol is singular at the origin.
    #[error("jacobian at the origin is singular; no compositional inverse exists")]
    SingularJacobian,

    /// An index fell outside its admissible range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(&'static str),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

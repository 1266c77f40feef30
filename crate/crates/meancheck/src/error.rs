//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing domain values, evaluating
/// functions outside their domain, or running the numerical solvers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A pair of arguments was not two strictly positive finite reals.
    #[error("invalid pair ({a}, {b}): both entries must be finite and > 0")]
    InvalidPair { a: f64, b: f64 },

    /// An operation that needs two distinct arguments received a = b.
    #[error("degenerate pair (a = b = {value}): the parameter x would be 0")]
    DegeneratePair { value: f64 },

    /// A scalar argument was outside the function's domain.
    #[error("invalid argument {value} for {what}")]
    InvalidParameter { what: &'static str, value: f64 },

    /// A root bracket did not actually bracket a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// The root finder exhausted its iteration budget.
    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),

    /// A registry lookup used a name that is not registered.
    #[error("unknown inequality name: {0}")]
    UnknownSpec(String),

    /// A sweep grid was malformed (non-positive min, min >= max, < 2 points).
    #[error("invalid grid: min {min}, max {max}, points {points}")]
    InvalidGrid { min: f64, max: f64, points: usize },

    /// A sweep grid extends outside the x-domain on which a claim holds.
    #[error(
        "grid [{grid_min}, {grid_max}] outside the claim's domain \
         [{domain_min}, {domain_max}]"
    )]
    GridOutsideDomain {
        grid_min: f64,
        grid_max: f64,
        domain_min: f64,
        domain_max: f64,
    },
}

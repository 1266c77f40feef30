//! The substitution (a, b) <-> (G, x) with a = G·e^x, b = G·e^{-x}.
//!
//! Under this change of variables every ratio mean/G becomes an elementary
//! even function of x (cosh x for A, sinh(x)/x for L, ...), which is how the
//! rest of the crate evaluates and compares means: all comparisons reduce to
//! scale-free functions of the single parameter x >= 0.

use crate::error::{Error, Result};
use crate::means::{MeanKind, PositivePair};
use crate::stable;

/// A pair in hyperbolic form: scale G = sqrt(ab) and half-log-ratio
/// x = (1/2)·log(a/b).  x is signed; swapping the pair negates it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Param {
    /// Geometric mean of the pair.
    pub scale: f64,
    /// (1/2)·log(a/b).
    pub x: f64,
}

/// Forward map: (a, b) -> (G, x), with full relative precision in x even
/// when a/b - 1 is at the rounding level.
pub fn to_param(p: &PositivePair) -> Param {
    let magnitude = p.half_log_ratio();
    let x = if p.a() >= p.b() {
        magnitude
    } else {
        -magnitude
    };
    Param {
        scale: crate::means::mean(MeanKind::Geometric, p),
        x,
    }
}

/// Inverse map: (G, x) -> (G·e^x, G·e^{-x}).
///
/// Fails if the scale is not a positive finite number or if either
/// reconstructed endpoint leaves the positive normal range of f64.
pub fn from_param(param: &Param) -> Result<PositivePair> {
    if !(param.scale.is_finite() && param.scale > 0.0) {
        return Err(Error::InvalidParameter {
            what: "scale",
            value: param.scale,
        });
    }
    if !param.x.is_finite() {
        return Err(Error::InvalidParameter {
            what: "x",
            value: param.x,
        });
    }
    let a = param.scale * param.x.exp();
    let b = param.scale * (-param.x).exp();
    PositivePair::new(a, b)
}

/// mean/G as a function of x alone.  Even in x; equals 1 at x = 0.
///
/// | kind | ratio(x)            |
/// |------|---------------------|
/// | A    | cosh x              |
/// | G    | 1                   |
/// | L    | sinh(x)/x           |
/// | I    | e^{x·coth(x) - 1}   |
/// | S    | e^{x·tanh(x)}       |
/// | Q    | sqrt(cosh 2x)       |
pub fn ratio(kind: MeanKind, x: f64) -> f64 {
    let x = x.abs();
    match kind {
        MeanKind::Arithmetic => x.cosh(),
        MeanKind::Geometric => 1.0,
        MeanKind::Logarithmic => stable::sinhc(x),
        MeanKind::Identric => stable::x_coth_minus_one(x).exp(),
        MeanKind::WeightedS => (x * x.tanh()).exp(),
        MeanKind::RootSquare => (0.5 * stable::log_cosh(2.0 * x)).exp(),
    }
}

/// log(mean/G) as a function of x alone: the same table as [`ratio`] but in
/// the log domain, usable far beyond the overflow range of cosh.
pub fn log_ratio(kind: MeanKind, x: f64) -> f64 {
    let x = x.abs();
    match kind {
        MeanKind::Arithmetic => stable::log_cosh(x),
        MeanKind::Geometric => 0.0,
        MeanKind::Logarithmic => stable::log_sinhc(x),
        MeanKind::Identric => stable::x_coth_minus_one(x),
        MeanKind::WeightedS => x * x.tanh(),
        MeanKind::RootSquare => 0.5 * stable::log_cosh(2.0 * x),
    }
}

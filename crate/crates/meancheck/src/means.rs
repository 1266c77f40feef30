//! The six primitive bivariate means and composed expressions over them.
//!
//! All means are symmetric and homogeneous of degree one.  The logarithmic,
//! identric, and weighted-geometric means are evaluated through the
//! substitution x = (1/2)·log(a/b) with scale G = sqrt(ab), which keeps full
//! relative precision arbitrarily close to the diagonal a = b, where their
//! textbook formulas are 0/0.

use crate::error::{Error, Result};
use crate::stable;

/// An ordered pair of strictly positive, finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    /// Validates both entries: finite and strictly positive.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 {
            Ok(Self { a, b })
        } else {
            Err(Error::InvalidPair { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// x = (1/2)·|log(a/b)|, computed without cancellation: via `log1p` of
    /// (hi - lo)/lo when the ratio is within a factor of two (where hi - lo
    /// is exact by the Sterbenz lemma), via log(hi/lo) when that quotient is
    /// a normal number, and via log(hi) - log(lo) otherwise.
    pub(crate) fn half_log_ratio(&self) -> f64 {
        let (hi, lo) = if self.a >= self.b {
            (self.a, self.b)
        } else {
            (self.b, self.a)
        };
        let r = hi / lo;
        if r <= 2.0 {
            0.5 * ((hi - lo) / lo).ln_1p()
        } else if r.is_finite() && r >= f64::MIN_POSITIVE {
            0.5 * r.ln()
        } else {
            0.5 * (hi.ln() - lo.ln())
        }
    }

    /// Geometric mean, factored as sqrt(a)·sqrt(b) so that a·b can neither
    /// overflow nor underflow for normal inputs.
    pub(crate) fn geometric(&self) -> f64 {
        self.a.sqrt() * self.b.sqrt()
    }
}

/// Tags for the six primitive means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeanKind {
    /// A = (a + b)/2.
    Arithmetic,
    /// G = sqrt(a·b).
    Geometric,
    /// L = (a - b)/(log a - log b), extended by L(a, a) = a.
    Logarithmic,
    /// I = (1/e)·(a^a/b^b)^{1/(a-b)}, extended by I(a, a) = a.
    Identric,
    /// S = (a^a·b^b)^{1/(a+b)}.
    WeightedS,
    /// Q = sqrt((a^2 + b^2)/2).
    RootSquare,
}

impl MeanKind {
    /// All six kinds in display order.
    pub const ALL: [MeanKind; 6] = [
        MeanKind::Arithmetic,
        MeanKind::Geometric,
        MeanKind::Logarithmic,
        MeanKind::Identric,
        MeanKind::WeightedS,
        MeanKind::RootSquare,
    ];

    /// Conventional one-letter symbol.
    pub fn symbol(&self) -> &'static str {
        match self {
            MeanKind::Arithmetic => "A",
            MeanKind::Geometric => "G",
            MeanKind::Logarithmic => "L",
            MeanKind::Identric => "I",
            MeanKind::WeightedS => "S",
            MeanKind::RootSquare => "Q",
        }
    }
}

/// Exponent applied to inner values before composing: only 1 and 2 occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Power {
    One,
    Two,
}

impl Power {
    fn apply(&self, v: f64) -> f64 {
        match self {
            Power::One => v,
            Power::Two => v * v,
        }
    }
}

/// A closed vocabulary of mean expressions over a pair (a, b): the raw
/// arguments themselves, primitive means, and one level of composition with
/// an optional squaring of the inner values, e.g. I(A^2, G^2) or I(a^2, b^2).
#[derive(Debug, Clone, PartialEq)]
pub enum MeanExpr {
    /// The first raw argument a.
    First,
    /// The second raw argument b.
    Second,
    /// A primitive mean of (a, b).
    Primitive(MeanKind),
    /// outer(left^power, right^power).
    Composed {
        outer: MeanKind,
        left: Box<MeanExpr>,
        right: Box<MeanExpr>,
        power: Power,
    },
}

impl MeanExpr {
    /// Convenience constructor for one level of composition.
    pub fn composed(outer: MeanKind, left: MeanExpr, right: MeanExpr, power: Power) -> Self {
        MeanExpr::Composed {
            outer,
            left: Box::new(left),
            right: Box::new(right),
            power,
        }
    }
}

/// Evaluates a primitive mean.  The result lies in [min(a,b), max(a,b)],
/// strictly inside for distinct arguments and the L/I kinds.
pub fn mean(kind: MeanKind, p: &PositivePair) -> f64 {
    let (a, b) = (p.a(), p.b());
    if a == b {
        return a;
    }
    match kind {
        MeanKind::Arithmetic => 0.5 * a + 0.5 * b,
        MeanKind::Geometric => p.geometric(),
        MeanKind::RootSquare => {
            // factor out the larger argument so squaring cannot overflow
            let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
            let r = lo / hi;
            hi * (0.5 + 0.5 * r * r).sqrt()
        }
        MeanKind::Logarithmic => {
            let x = p.half_log_ratio();
            p.geometric() * stable::sinhc(x)
        }
        MeanKind::Identric => {
            let x = p.half_log_ratio();
            scale_by_exp(p.geometric(), stable::x_coth_minus_one(x))
        }
        MeanKind::WeightedS => {
            let x = p.half_log_ratio();
            scale_by_exp(p.geometric(), x * x.tanh())
        }
    }
}

/// g·e^lam, falling back to exp(log g + lam) when the direct product
/// overflows or underflows (possible only for extreme argument ratios,
/// where the result itself is still representable).
fn scale_by_exp(g: f64, lam: f64) -> f64 {
    let v = g * lam.exp();
    if v.is_finite() && v > 0.0 {
        v
    } else {
        (g.ln() + lam).exp()
    }
}

/// Evaluates a composed mean expression at a pair.
///
/// `Composed` evaluates both inner expressions, raises them to `power`, and
/// applies the outer mean to the result.  Errors propagate from intermediate
/// pairs that leave the representable positive range (e.g. squaring a value
/// past 1e154).
pub fn eval_expr(e: &MeanExpr, p: &PositivePair) -> Result<f64> {
    match e {
        MeanExpr::First => Ok(p.a()),
        MeanExpr::Second => Ok(p.b()),
        MeanExpr::Primitive(kind) => Ok(mean(*kind, p)),
        MeanExpr::Composed {
            outer,
            left,
            right,
            power,
        } => {
            let l = power.apply(eval_expr(left, p)?);
            let r = power.apply(eval_expr(right, p)?);
            let inner = PositivePair::new(l, r)?;
            Ok(mean(*outer, &inner))
        }
    }
}

/// log(mean(kind, p)) - log(G(p)), computed without forming the quotient of
/// the two means, so the result keeps absolute precision even when a/b is as
/// extreme as 1e12 or the pair is within 1e-12 of the diagonal.
pub fn log_mean_ratio(kind: MeanKind, p: &PositivePair) -> f64 {
    let x = p.half_log_ratio();
    match kind {
        MeanKind::Arithmetic => stable::log_cosh(x),
        MeanKind::Geometric => 0.0,
        MeanKind::Logarithmic => stable::log_sinhc(x),
        MeanKind::Identric => stable::x_coth_minus_one(x),
        MeanKind::WeightedS => x * x.tanh(),
        MeanKind::RootSquare => 0.5 * stable::log_cosh(2.0 * x),
    }
}

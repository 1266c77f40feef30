//! Scalar auxiliary functions behind the mean inequalities, their limits and
//! critical points, and the sharp constants recovered from them by bracketed
//! root-finding.
//!
//! Naming: `f_thm1`, `f_lemma2`, `k_lemma2`, `g_lemma2` are the crate's
//! contract names for these functions; the `*_gap` variants evaluate the
//! distance to the respective limit constant with full relative precision,
//! which the plain forms cannot deliver once f64 rounding saturates them.

use crate::error::{Error, Result};
use crate::stable;
use std::f64::consts::LN_2;

/// f_thm1(x) = x/tanh x − log(cosh x)/tanh²x.
///
/// Strictly increasing from 1/2 (limit at 0⁺, returned at x = 0) to log 2
/// (limit at ∞); the value stays inside (1/2, log 2) for every finite x > 0.
/// Three evaluation regimes: an even Maclaurin series below 1e-3, the direct
/// formula up to 10, and log 2 minus [`f_thm1_upper_gap`] beyond, which keeps
/// the approach to the limit meaningful long after the direct subtraction
/// has rounded to log 2 itself.
pub fn f_thm1(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidParameter {
            what: "f_thm1 argument",
            value: x,
        });
    }
    Ok(if x < 10.0 {
        0.5 + f_thm1_lower_gap(x)
    } else {
        LN_2 - f_thm1_upper_gap(x)
    })
}

/// f_thm1(x) − 1/2, with full relative precision down to x = 0 (where the
/// plain difference would be 0/0-amplified rounding noise).
pub fn f_thm1_lower_gap(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.05 {
        // x²/12 − x⁴/45 + 37x⁶/7560 − c₈x⁸, c₈ fit at 60-digit precision
        let x2 = x * x;
        x2 * (1.0 / 12.0
            + x2 * (-1.0 / 45.0 + x2 * (37.0 / 7560.0 + x2 * (-1.00529100415490888e-3))))
    } else if x < 10.0 {
        let t = x.tanh();
        (x / t - 0.5) - stable::log_cosh(x) / (t * t)
    } else {
        (LN_2 - 0.5) - f_thm1_upper_gap(x)
    }
}

/// log 2 − f_thm1(x), positive for every finite x and decaying like
/// (2x + 1 − 4 log 2)·e^{−2x}.
///
/// For x ≥ 1 this is evaluated in the variable q = e^{−2x} as
///
///   [2xq(1+q) − 4q·log 2 + log(1+q)·(1+q)²] / (1−q)²,
///
/// an exact rearrangement whose terms no longer cancel, so the gap keeps
/// full relative precision (e.g. ~5e-25 at x = 30) where the direct
/// subtraction would return exactly 0.
pub fn f_thm1_upper_gap(x: f64) -> f64 {
    let x = x.abs();
    if x < 1.0 {
        let t = x.tanh();
        let f = x / t - stable::log_cosh(x) / (t * t);
        LN_2 - f
    } else {
        let q = (-2.0 * x).exp();
        let opq = 1.0 + q;
        let num = 2.0 * x * q * opq - 4.0 * q * LN_2 + q.ln_1p() * opq * opq;
        let den = -(-2.0 * x).exp_m1();
        num / (den * den)
    }
}

/// Both sides of the derivative identity
/// sinh³x · f_thm1′(x) = 2 cosh x · log(cosh x) − x sinh x,
/// with the left side formed from a central finite difference (h = 1e-5).
///
/// Above x = 6 the difference is taken on [`f_thm1_upper_gap`] (same
/// derivative up to sign, but relative-precise), so the identity stays
/// testable to ~1e-10 relative even at x = 20 where f_thm1 itself is within
/// one rounding ulp of log 2.
pub fn f_thm1_deriv_identity(x: f64) -> (f64, f64) {
    const H: f64 = 1e-5;
    let fd = if x > 6.0 {
        (f_thm1_upper_gap(x - H) - f_thm1_upper_gap(x + H)) / (2.0 * H)
    } else {
        (f_thm1_lower_gap(x + H) - f_thm1_lower_gap(x - H)) / (2.0 * H)
    };
    let s = x.sinh();
    let lhs = s * s * s * fd;
    let rhs = 2.0 * x.cosh() * stable::log_cosh(x) - x * s;
    (lhs, rhs)
}

/// f_lemma2(x) = 2x/tanh x − log((cosh²x + 1)/2).
///
/// Limit 2 at 0⁺ (returned at x = 0), a unique interior maximum
/// f(x₁) = 2.13128… at x₁ = 1.60611…, and limit 3·log 2 at ∞.  Same
/// three-regime layout as [`f_thm1`].
pub fn f_lemma2(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::InvalidParameter {
            what: "f_lemma2 argument",
            value: x,
        });
    }
    Ok(if x < 10.0 {
        2.0 + f_lemma2_minus_two(x)
    } else {
        3.0 * LN_2 + f_lemma2_tail_gap(x)
    })
}

/// f_lemma2(x) − 2, relative-precise near 0.
pub fn f_lemma2_minus_two(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.05 {
        // x²/6 − 31x⁴/360 + c₆x⁶, c₆ fit at 60-digit precision
        let x2 = x * x;
        x2 * (1.0 / 6.0 + x2 * (-31.0 / 360.0 + x2 * 0.0236772486680919312))
    } else if x < 10.0 {
        2.0 * stable::x_coth(x) - stable::log_avg_cosh_sq_one(x) - 2.0
    } else {
        (3.0 * LN_2 - 2.0) + f_lemma2_tail_gap(x)
    }
}

/// f_lemma2(x) − 3 log 2, in the variable q = e^{−2x}:
///
///   4xq/(1−q) − log(1 + q(6+q)),
///
/// an exact rearrangement that is relative-precise for large x, where it
/// decays like (4x − 6)·e^{−2x}.  Negative left of the crossing with 3 log 2
/// (x ≈ 1.17), positive to the right of it.
pub fn f_lemma2_tail_gap(x: f64) -> f64 {
    let x = x.abs();
    if x == 0.0 {
        return 2.0 - 3.0 * LN_2;
    }
    let q = (-2.0 * x).exp();
    4.0 * x * q / (-(-2.0 * x).exp_m1()) - (q * (6.0 + q)).ln_1p()
}

/// k_lemma2(x) = tanh x − 2x/3: positive on (0, x₀), negative beyond the
/// single positive zero x₀ ≈ 1.288.
pub fn k_lemma2(x: f64) -> f64 {
    x.tanh() - 2.0 * x / 3.0
}

/// g_lemma2(x) = sinh 2x − x·(cosh²x + 1), the numerator controlling the
/// sign of f_lemma2′:
///
///   ((cosh²x + 1)/2) · sinh²x · f_lemma2′(x) = g_lemma2(x).
///
/// Positive on (0, x₁), negative on (x₁, ∞), with x₁ ≈ 1.606 the maximizer
/// of f_lemma2.  A Maclaurin series covers |x| < 0.05 where the direct form
/// cancels; beyond x = 100 the e^{−2x} corrections are below one ulp and
/// the dominant-term form avoids an inf − inf.
pub fn g_lemma2(x: f64) -> f64 {
    let ax = x.abs();
    let v = if ax < 0.05 {
        let x2 = ax * ax;
        ax * x2 * (1.0 / 3.0 + x2 * (-1.0 / 15.0 + x2 * (-2.0 / 105.0 - x2 / 567.0)))
    } else if ax <= 100.0 {
        let c = ax.cosh();
        (2.0 * ax).sinh() - ax * (c * c + 1.0)
    } else {
        (2.0 * ax).exp() * (0.5 - 0.25 * ax) - ax
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

/// h(x) = (x/tanh x − 1) − cosh x·log(cosh x)/(1 + cosh x): the sign of
/// I(a,b) − S(A,G) in the hyperbolic variable.  Positive below the crossing
/// at x ≈ 2.2788, negative above it.
pub fn h_crossing(x: f64) -> f64 {
    let x = x.abs();
    if x > 40.0 {
        // cosh/(1 + cosh) is 1 to the last ulp here
        stable::x_coth_minus_one(x) - stable::log_cosh(x)
    } else {
        let c = x.cosh();
        stable::x_coth_minus_one(x) - c * stable::log_cosh(x) / (1.0 + c)
    }
}

/// A certified sign change: lo < hi with f(lo)·f(hi) < 0, established at
/// construction so that every [`find_root`] call starts from a witness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    /// Validates the bracket invariant on already-evaluated endpoints.
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        let signs_change = f_lo.is_finite() && f_hi.is_finite() && f_lo * f_hi < 0.0;
        if lo.is_finite() && hi.is_finite() && lo < hi && signs_change {
            Ok(Self { lo, hi, f_lo, f_hi })
        } else {
            Err(Error::NoSignChange { lo, hi, f_lo, f_hi })
        }
    }

    /// Evaluates `f` at both endpoints and validates the sign change.
    pub fn from_fn<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, f(lo), f(hi))
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

const ROOT_ITERATION_BUDGET: usize = 200;

/// Bracket-preserving hybrid root finder: alternates guaranteed bisection
/// steps with secant steps (accepted only strictly inside the current
/// bracket), stopping when the bracket width is at most `tol`.
///
/// Deterministic — identical inputs give bit-identical roots — and the
/// returned point is strictly inside the original bracket.  Fails with a
/// non-convergence error if the budget of 200 iterations is exhausted,
/// which can only happen when `tol` is below the floating-point spacing
/// inside the bracket.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: &RootBracket, tol: f64) -> Result<f64> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            what: "root tolerance",
            value: tol,
        });
    }
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let (mut f_lo, mut f_hi) = (bracket.f_lo, bracket.f_hi);
    for iteration in 0..ROOT_ITERATION_BUDGET {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol {
            return Ok(mid);
        }
        let mut t = mid;
        if iteration % 2 == 1 && f_hi != f_lo {
            let secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if secant > lo && secant < hi {
                t = secant;
            }
        }
        let f_t = f(t);
        if f_t == 0.0 {
            return Ok(t);
        }
        if (f_t > 0.0) == (f_hi > 0.0) {
            hi = t;
            f_hi = f_t;
        } else {
            lo = t;
            f_lo = f_t;
        }
    }
    Err(Error::NoConvergence(ROOT_ITERATION_BUDGET))
}

/// A named constant with the abscissa it was recovered at, the certified
/// value, the tolerance the crate holds itself to, and a short statement of
/// the mathematical fact it witnesses.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SharpConstant {
    pub name: &'static str,
    pub x_star: f64,
    pub value: f64,
    pub tolerance: f64,
    pub note: &'static str,
}

const ROOT_TOL: f64 = 1e-12;

/// Zero of k_lemma2 in (1, 3/2).
pub fn x0_zero_of_k() -> Result<f64> {
    let bracket = RootBracket::from_fn(k_lemma2, 1.0, 1.5)?;
    find_root(k_lemma2, &bracket, ROOT_TOL)
}

/// Maximizer of f_lemma2: the zero of g_lemma2 in (1.5, 2).
pub fn x1_zero_of_g() -> Result<f64> {
    let bracket = RootBracket::from_fn(g_lemma2, 1.5, 2.0)?;
    find_root(g_lemma2, &bracket, ROOT_TOL)
}

/// Zero of [`h_crossing`] in (2.0, 2.4): the argument ratio (in x) at which
/// I(a,b) and S(A,G) change order.  Lands in (2.2, 2.284].
pub fn crossing_i_vs_sag() -> Result<f64> {
    let bracket = RootBracket::from_fn(h_crossing, 2.0, 2.4)?;
    find_root(h_crossing, &bracket, ROOT_TOL)
}

/// The two witness differences y·log y/(y − 1) − x/tanh x with
/// y = sqrt(cosh 2x), at x = 3/2 and x = 2.  The first is positive and the
/// second negative: neither one-sided bound between these expressions holds
/// for all x.
///
/// Evaluated as log I(y, 1) − log I(e^x, e^{−x}) =
/// (w/2 + w/(2 tanh(w/2)) − 1) − (x/tanh x − 1) with w = log y·2 … i.e.
/// entirely through the relative-precise kernels, no direct y − 1 division.
pub fn counterexample_1711() -> (f64, f64) {
    let d = |x: f64| {
        let half_log_y = 0.25 * stable::log_cosh(2.0 * x);
        half_log_y + stable::x_coth_minus_one(half_log_y) - stable::x_coth_minus_one(x)
    };
    (d(1.5), d(2.0))
}

/// Every sharp constant the crate certifies, in display order: the four
/// limit constants of f_thm1 and f_lemma2, the interior maximum data
/// (x₁, f(x₁), c = e^{f(x₁)−2}), the I-vs-S(A,G) crossing, and the two
/// order-witness differences at x = 3/2 and x = 2.
///
/// Limit rows carry the probe abscissa their tolerance was certified at;
/// root rows carry the root itself.  Root-finder failures propagate (they
/// would mean a sign condition has been falsified).
pub fn sharp_constants() -> Result<Vec<SharpConstant>> {
    let x1 = x1_zero_of_g()?;
    let f_at_x1 = f_lemma2(x1)?;
    let crossing = crossing_i_vs_sag()?;
    let (d_at_3_2, d_at_2) = counterexample_1711();
    Ok(vec![
        SharpConstant {
            name: "f_thm1_limit_at_zero",
            x_star: 1e-6,
            value: 0.5,
            tolerance: 1e-6,
            note: "x->0 limit of f_thm1; lower bound of its range",
        },
        SharpConstant {
            name: "f_thm1_limit_at_infinity",
            x_star: 50.0,
            value: LN_2,
            tolerance: 1e-6,
            note: "x->inf limit of f_thm1; exponentiating log2 - 1/2 gives \
                   the sharp factor 2/sqrt(e)",
        },
        SharpConstant {
            name: "f_lemma2_limit_at_zero",
            x_star: 1e-6,
            value: 2.0,
            tolerance: 1e-5,
            note: "x->0 limit of f_lemma2",
        },
        SharpConstant {
            name: "f_lemma2_limit_at_infinity",
            x_star: 50.0,
            value: 3.0 * LN_2,
            tolerance: 1e-6,
            note: "x->inf limit of f_lemma2",
        },
        SharpConstant {
            name: "x1",
            x_star: x1,
            value: x1,
            tolerance: 1e-9,
            note: "unique maximizer of f_lemma2: the zero of g_lemma2 in \
                   (3/2, 2)",
        },
        SharpConstant {
            name: "f_lemma2_max",
            x_star: x1,
            value: f_at_x1,
            tolerance: 1e-9,
            note: "maximum of f_lemma2, attained at x1",
        },
        SharpConstant {
            name: "c",
            x_star: x1,
            value: (f_at_x1 - 2.0).exp(),
            tolerance: 1e-9,
            note: "best-possible factor exp(f_lemma2(x1) - 2) ~ 1.14 in the \
                   upper bound I^2 < c*(A^2+G^2)/2",
        },
        SharpConstant {
            name: "crossing_I_vs_SAG",
            x_star: crossing,
            value: crossing,
            tolerance: 1e-9,
            note: "zero of h_crossing: I(a,b) > S(A,G) left of it, \
                   I(a,b) < S(A,G) right of it",
        },
        SharpConstant {
            name: "diff_1711_at_3_2",
            x_star: 1.5,
            value: d_at_3_2,
            tolerance: 1e-12,
            note: "y*log(y)/(y-1) - x/tanh(x) at x = 3/2, y = sqrt(cosh 2x): \
                   positive, so '<' fails there",
        },
        SharpConstant {
            name: "diff_1711_at_2",
            x_star: 2.0,
            value: d_at_2,
            tolerance: 1e-12,
            note: "same difference at x = 2: negative, so '>' fails there",
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        let (llo, lhi) = (lo.ln(), hi.ln());
        (0..n)
            .map(|i| {
                if i == 0 {
                    lo
                } else if i == n - 1 {
                    hi
                } else {
                    (llo + (lhi - llo) * i as f64 / (n - 1) as f64).exp()
                }
            })
            .collect()
    }

    // All frozen decimals below come from tools/golden.py (mpmath, 60
    // significant digits, definition-based formulas).

    #[test]
    fn f_thm1_golden_samples() {
        let cases = [
            (0.001, 0.500000083333311111116),
            (0.01, 0.500008333111116005190),
            (0.1, 0.500831115995258707253),
            (0.5, 0.519517180559951905385),
            (1.0, 0.565170386401417893123),
            (2.0, 0.648897560702615480252),
            (5.0, 0.692773599042130740185),
            (10.0, 0.693147142990450280372),
        ];
        for (x, want) in cases {
            assert_relative_eq!(f_thm1(x).unwrap(), want, max_relative = 1e-14);
        }
        assert_eq!(f_thm1(0.0).unwrap(), 0.5);
        assert!(f_thm1(-1.0).is_err());
        assert!(f_thm1(f64::NAN).is_err());
        assert!(f_thm1(f64::INFINITY).is_err());
    }

    #[test]
    fn f_thm1_limits() {
        assert!((f_thm1(1e-6).unwrap() - 0.5).abs() < 1e-12);
        assert!((f_thm1(50.0).unwrap() - LN_2).abs() < 1e-12);
        // the contract tolerances from the acceptance gate, much looser
        assert!((f_thm1(1e-6).unwrap() - 0.5).abs() < 1e-6);
        assert!((f_thm1(50.0).unwrap() - LN_2).abs() < 1e-6);
    }

    #[test]
    fn f_thm1_gap_golden_samples() {
        let lower = [
            (1e-4, 8.33333331111111116005e-10),
            (0.001, 8.33333111111160052900e-8),
            (0.01, 0.00000833311111600519047826),
            (1.0, 0.0651703864014178931232),
        ];
        for (x, want) in lower {
            assert_relative_eq!(f_thm1_lower_gap(x), want, max_relative = 1e-12);
        }
        let upper = [
            (1.0, 0.127976794158527416294),
            (2.0, 0.0442496198573298291652),
            (5.0, 0.000373581517814569232568),
            (10.0, 3.75694950290455147256e-8),
            (15.0, 2.64141472123744222540e-12),
            (20.0, 1.62403585370654306826e-16),
            (30.0, 5.09868953537664103060e-25),
        ];
        for (x, want) in upper {
            assert_relative_eq!(f_thm1_upper_gap(x), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn f_thm1_branch_seams_agree() {
        // series vs direct at the 0.05 gap seam
        let x = 0.05f64;
        let t = x.tanh();
        let direct = (x / t - 0.5) - stable::log_cosh(x) / (t * t);
        assert_relative_eq!(f_thm1_lower_gap(x), direct, max_relative = 1e-11);
        // direct vs q-form at the x = 1 seam of the upper gap
        let f = f_thm1(1.0).unwrap();
        assert_relative_eq!(f_thm1_upper_gap(1.0), LN_2 - f, max_relative = 1e-13);
        // direct vs limit-form at the x = 10 seam of f itself
        let t = 10.0f64.tanh();
        let direct = 10.0 / t - stable::log_cosh(10.0) / (t * t);
        assert_abs_diff_eq!(f_thm1(10.0).unwrap(), direct, epsilon = 5e-15);
    }

    #[test]
    fn f_thm1_strictly_increasing_and_bounded() {
        let grid = logspace(1e-4, 15.0, 1200);
        let mut prev = f_thm1(grid[0]).unwrap();
        for &x in &grid[1..] {
            let v = f_thm1(x).unwrap();
            assert!(v > prev, "not increasing at x = {x}");
            assert!(v > 0.5 && v < LN_2, "out of range at x = {x}: {v}");
            prev = v;
        }
        // past the f64 saturation of f itself, strictness lives in the gap:
        // both gaps stay positive and the upper gap keeps shrinking
        let tail = logspace(1.0, 30.0, 600);
        let mut prev_gap = f_thm1_upper_gap(tail[0]);
        for &x in &tail[1..] {
            let gap = f_thm1_upper_gap(x);
            assert!(gap > 0.0 && gap < prev_gap, "upper gap at x = {x}");
            prev_gap = gap;
        }
        for &x in &logspace(1e-4, 30.0, 600) {
            assert!(f_thm1_lower_gap(x) > 0.0, "lower gap at x = {x}");
        }
    }

    #[test]
    fn deriv_identity_holds_on_contract_range() {
        for &x in &[
            0.01, 0.05, 0.1, 0.5, 1.0, 2.0, 4.0, 5.9, 6.1, 8.0, 10.0, 15.0, 20.0,
        ] {
            let (lhs, rhs) = f_thm1_deriv_identity(x);
            assert!(
                (lhs - rhs).abs() <= 1e-6f64.max(1e-6 * rhs.abs()),
                "x = {x}: lhs {lhs} rhs {rhs}"
            );
            assert!(lhs > 0.0 && rhs > 0.0, "positivity at x = {x}");
        }
    }

    #[test]
    fn deriv_identity_rhs_positive_on_grid() {
        for &x in &logspace(1e-4, 30.0, 800) {
            let rhs = 2.0 * x.cosh() * stable::log_cosh(x) - x * x.sinh();
            assert!(rhs > 0.0, "x = {x}: {rhs}");
        }
    }

    #[test]
    fn f_lemma2_golden_samples() {
        let cases = [
            (0.001, 2.00000016666658055558),
            (0.01, 2.00001666580557923250),
            (0.5, 2.03664243899484782457),
            (1.0, 2.10101728842853282713),
            (1.606, 2.13128100998198949292),
            (2.0, 2.12413385766182282601),
            (5.0, 2.08007721695489155020),
        ];
        for (x, want) in cases {
            assert_relative_eq!(f_lemma2(x).unwrap(), want, max_relative = 1e-14);
        }
        assert_eq!(f_lemma2(0.0).unwrap(), 2.0);
        assert!(f_lemma2(-0.5).is_err());
    }

    #[test]
    fn f_lemma2_limits_and_gaps() {
        assert!((f_lemma2(1e-6).unwrap() - 2.0).abs() < 1e-11);
        assert!((f_lemma2(50.0).unwrap() - 3.0 * LN_2).abs() < 1e-12);
        let minus_two = [
            (1e-4, 1.66666665805555557923e-9),
            (0.01, 0.0000166658055792324990040),
            (1.0, 0.101017288428532827133),
        ];
        for (x, want) in minus_two {
            assert_relative_eq!(f_lemma2_minus_two(x), want, max_relative = 1e-12);
        }
        let tail = [
            (2.0, 0.0446923159819868977580),
            (5.0, 0.000635675275055621944219),
            (10.0, 7.00792234050671584748e-8),
            (20.0, 3.14378214891577587405e-16),
            (30.0, 9.98242226947403318588e-25),
        ];
        for (x, want) in tail {
            assert_relative_eq!(f_lemma2_tail_gap(x), want, max_relative = 1e-12);
        }
        // consistency: f2 = 3 log 2 + tail gap wherever both are exact
        for &x in &[2.0, 3.0, 5.0, 8.0] {
            assert_relative_eq!(
                f_lemma2(x).unwrap(),
                3.0 * LN_2 + f_lemma2_tail_gap(x),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn f_lemma2_unimodal_on_grid() {
        let x1 = x1_zero_of_g().unwrap();
        let f_max = f_lemma2(x1).unwrap();
        // strictly increasing left of x1
        let left = logspace(1e-4, x1, 700);
        let mut prev = f_lemma2(left[0]).unwrap();
        for &x in &left[1..] {
            let v = f_lemma2(x).unwrap();
            assert!(v > prev, "not increasing at x = {x}");
            prev = v;
        }
        // strictly decreasing right of x1 while f64 still resolves steps,
        // and via the relative-precise tail gap across the whole range
        let right = logspace(1.62, 15.0, 500);
        let mut prev = f_lemma2(right[0]).unwrap();
        for &x in &right[1..] {
            let v = f_lemma2(x).unwrap();
            assert!(v < prev, "not decreasing at x = {x}");
            prev = v;
        }
        let tail = logspace(1.62, 30.0, 500);
        let mut prev = f_lemma2_tail_gap(tail[0]);
        for &x in &tail[1..] {
            let gap = f_lemma2_tail_gap(x);
            assert!(gap < prev, "tail gap not decreasing at x = {x}");
            prev = gap;
        }
        // bounds: 2 < f ≤ f(x1) everywhere (a few ulps of slack on the max)
        for &x in &logspace(1e-4, 30.0, 900) {
            assert!(f_lemma2_minus_two(x) > 0.0, "lower bound at x = {x}");
            assert!(
                f_lemma2(x).unwrap() <= f_max + 5e-15,
                "max exceeded at x = {x}"
            );
        }
    }

    #[test]
    fn k_golden_samples_and_sign_pattern() {
        assert_relative_eq!(1.0f64.tanh(), 0.761594155955764888119, max_relative = 1e-15);
        assert_relative_eq!(
            k_lemma2(1.0),
            0.0949274892890982214528,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            k_lemma2(1.5),
            -0.0948517463551335617577,
            max_relative = 1e-13
        );
        for &x in &logspace(0.1, 1.28, 120) {
            assert!(k_lemma2(x) > 0.0, "x = {x}");
        }
        for &x in &logspace(1.30, 30.0, 120) {
            assert!(k_lemma2(x) < 0.0, "x = {x}");
        }
    }

    #[test]
    fn g_golden_samples_and_sign_pattern() {
        assert_relative_eq!(g_lemma2(1.0), 0.245762562305203037887, max_relative = 1e-13);
        assert_relative_eq!(g_lemma2(1.5), 0.217128430576577517509, max_relative = 1e-13);
        assert_relative_eq!(g_lemma2(2.0), -3.01831563888873418029, max_relative = 1e-13);
        for &x in &logspace(1e-3, 1.60, 150) {
            assert!(g_lemma2(x) > 0.0, "x = {x}");
        }
        for &x in &logspace(1.61, 80.0, 150) {
            assert!(g_lemma2(x) < 0.0, "x = {x}");
        }
        assert_eq!(g_lemma2(0.0), 0.0);
        // odd in x
        assert_eq!(g_lemma2(-1.0), -g_lemma2(1.0));
    }

    #[test]
    fn g_branch_seams_agree() {
        let x = 0.05f64;
        let c = x.cosh();
        let direct = (2.0 * x).sinh() - x * (c * c + 1.0);
        assert_relative_eq!(g_lemma2(x), direct, max_relative = 1e-11);

        let x = 100.0f64;
        let c = x.cosh();
        let direct = (2.0 * x).sinh() - x * (c * c + 1.0);
        assert_relative_eq!(g_lemma2(x), direct, max_relative = 1e-13);
    }

    #[test]
    fn g_matches_scaled_derivative_of_f_lemma2() {
        // g = ((cosh²x+1)/2)·sinh²x·f_lemma2′, with f_lemma2′ from a central
        // difference of the tail gap (same derivative, relative-precise)
        const H: f64 = 1e-5;
        for &x in &logspace(0.1, 10.0, 160) {
            let fd = (f_lemma2_tail_gap(x + H) - f_lemma2_tail_gap(x - H)) / (2.0 * H);
            let c = x.cosh();
            let s = x.sinh();
            let from_fd = 0.5 * (c * c + 1.0) * s * s * fd;
            let g = g_lemma2(x);
            assert!(
                (g - from_fd).abs() <= 1e-8 * g.abs().max(1.0),
                "x = {x}: g {g} vs finite difference {from_fd}"
            );
        }
    }

    #[test]
    fn h_golden_samples() {
        let cases = [
            (1.0, 0.0498274303850311115559),
            (2.1, 0.0185737998118793238491),
            (2.3, -0.00233215204647983233195),
            (3.0, -0.0857635385203041057960),
        ];
        for (x, want) in cases {
            assert_relative_eq!(h_crossing(x), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn root_finder_solves_the_three_brackets() {
        let x0 = x0_zero_of_k().unwrap();
        assert_relative_eq!(x0, 1.28783945496016554322, max_relative = 1e-10);
        assert!(x0 > 1.0 && x0 < 1.5);

        let x1 = x1_zero_of_g().unwrap();
        assert_relative_eq!(x1, 1.60611529880276736409, max_relative = 1e-10);
        assert!(x1 > 1.5 && x1 < 2.0);

        let crossing = crossing_i_vs_sag().unwrap();
        assert_relative_eq!(crossing, 2.27884555782988688604, max_relative = 1e-10);
        assert!(crossing > 2.2 && crossing <= 2.284);

        // linear sanity case
        let f = |t: f64| t - 5.0;
        let b = RootBracket::from_fn(f, 0.0, 10.0).unwrap();
        let r = find_root(f, &b, 1e-12).unwrap();
        assert_abs_diff_eq!(r, 5.0, epsilon = 1e-11);
        assert!(r > 0.0 && r < 10.0);
    }

    #[test]
    fn root_finder_is_deterministic() {
        let run = || {
            let b = RootBracket::from_fn(g_lemma2, 1.5, 2.0).unwrap();
            find_root(g_lemma2, &b, 1e-12).unwrap()
        };
        let first = run();
        for _ in 0..3 {
            assert_eq!(first.to_bits(), run().to_bits());
        }
    }

    #[test]
    fn root_finder_error_paths() {
        // no sign change
        assert!(matches!(
            RootBracket::from_fn(k_lemma2, 0.1, 0.5),
            Err(Error::NoSignChange { .. })
        ));
        // reversed endpoints
        assert!(RootBracket::from_fn(|t| t - 5.0, 10.0, 0.0).is_err());
        // unreachable tolerance exhausts the budget on a step function
        let step = |t: f64| if t < 5.0 { -1.0 } else { 1.0 };
        let b = RootBracket::from_fn(step, 0.0, 10.0).unwrap();
        assert!(matches!(
            find_root(step, &b, 1e-300),
            Err(Error::NoConvergence(_))
        ));
        // invalid tolerance
        let b = RootBracket::from_fn(|t| t - 5.0, 0.0, 10.0).unwrap();
        assert!(find_root(|t| t - 5.0, &b, 0.0).is_err());
        assert!(find_root(|t| t - 5.0, &b, f64::NAN).is_err());
    }

    #[test]
    fn counterexample_1711_golden() {
        let (at_3_2, at_2) = counterexample_1711();
        assert_relative_eq!(at_3_2, 0.0288561825561459215396, max_relative = 1e-12);
        assert_relative_eq!(at_2, -0.0297195306759247939749, max_relative = 1e-12);
        assert!(at_3_2 > 0.0 && at_2 < 0.0);
        // the defining form, computed directly, agrees at these mild x
        for (x, want) in [(1.5f64, at_3_2), (2.0, at_2)] {
            let y = (2.0 * x).cosh().sqrt();
            let direct = y * y.ln() / (y - 1.0) - x / x.tanh();
            assert_relative_eq!(direct, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn sharp_constants_are_recomputable_within_tolerance() {
        let constants = sharp_constants().unwrap();
        assert_eq!(constants.len(), 10);
        let by_name = |n: &str| {
            constants
                .iter()
                .find(|c| c.name == n)
                .unwrap_or_else(|| panic!("missing constant {n}"))
        };

        // each row must reproduce from its x_star within its tolerance
        for c in &constants {
            let recomputed = match c.name {
                "f_thm1_limit_at_zero" | "f_thm1_limit_at_infinity" => f_thm1(c.x_star).unwrap(),
                "f_lemma2_limit_at_zero" | "f_lemma2_limit_at_infinity" => {
                    f_lemma2(c.x_star).unwrap()
                }
                "x1" => c.x_star,
                "f_lemma2_max" => f_lemma2(c.x_star).unwrap(),
                "c" => (f_lemma2(c.x_star).unwrap() - 2.0).exp(),
                "crossing_I_vs_SAG" => c.x_star,
                "diff_1711_at_3_2" => counterexample_1711().0,
                "diff_1711_at_2" => counterexample_1711().1,
                other => panic!("unexpected constant {other}"),
            };
            assert!(
                (c.value - recomputed).abs() <= c.tolerance,
                "{}: value {} vs recomputed {}",
                c.name,
                c.value,
                recomputed
            );
        }

        // frozen decimals
        assert_relative_eq!(
            by_name("x1").value,
            1.60611529880276736409,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            by_name("f_lemma2_max").value,
            2.13128101081181436806,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            by_name("c").value,
            1.14028816959783681930,
            max_relative = 1e-12
        );
        assert!((by_name("c").value - 1.14).abs() < 0.005);
        assert_relative_eq!(
            by_name("f_lemma2_limit_at_infinity").value,
            2.07944154167983592825,
            max_relative = 1e-14
        );
        // x1 maximizes: nearby values are strictly smaller
        let x1 = by_name("x1").value;
        let fmax = by_name("f_lemma2_max").value;
        for dx in [1e-3, 1e-2, 0.1] {
            assert!(f_lemma2(x1 - dx).unwrap() < fmax);
            assert!(f_lemma2(x1 + dx).unwrap() < fmax);
        }
    }
}

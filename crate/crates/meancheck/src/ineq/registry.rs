//! The built-in registry of claims about the six bivariate means.
//!
//! Term logarithms are assembled from the numerically stable kernels in
//! [`crate::stable`] via [`crate::param::log_ratio`].  A single composition
//! rule covers every nested mean: for positive U, V of common degree with
//! logarithms u, v (relative to the matching power of G), the mean M(U, V)
//! has logarithm (u + v)/2 + log_ratio(M, (u − v)/2), because (u − v)/2 is
//! exactly the half-log-ratio of the pair (U, V) and sqrt(UV) has logarithm
//! (u + v)/2.

use std::f64::consts::{E, LN_2};
use std::sync::OnceLock;

use super::{InequalitySpec, Kind, LinkKind, MarginOverride, Term, Witness};
use crate::analysis::{f_lemma2, f_thm1_lower_gap, f_thm1_upper_gap, x1_zero_of_g};
use crate::means::{mean, MeanKind, PositivePair};
use crate::param::log_ratio;
use crate::stable::log_expm1_ratio;

use MeanKind::{Arithmetic, Geometric, Identric, Logarithmic, RootSquare, WeightedS};

/// log(c) for the sharp constant c in the `thm2` family, computed once per
/// process from the interior maximizer of the associated scalar function.
pub(crate) fn ln_c() -> f64 {
    static LN_C: OnceLock<f64> = OnceLock::new();
    *LN_C.get_or_init(|| {
        let x1 = x1_zero_of_g().expect("fixed bracket has a sign change");
        f_lemma2(x1).expect("maximizer is finite and positive") - 2.0
    })
}

/// Composition rule: log of M(U, V) relative to G^degree, given the term
/// logarithms `lu`, `lv` of U and V (same degree each).
fn compose(outer: MeanKind, lu: f64, lv: f64) -> f64 {
    0.5 * (lu + lv) + log_ratio(outer, 0.5 * (lu - lv))
}

fn lam_a(x: f64) -> f64 {
    log_ratio(Arithmetic, x)
}
fn lam_l(x: f64) -> f64 {
    log_ratio(Logarithmic, x)
}
fn lam_i(x: f64) -> f64 {
    log_ratio(Identric, x)
}

/// log((2A + G)/3G); switches to the exponential form once sinh overflows.
fn lam_two_a_plus_g_third(x: f64) -> f64 {
    if x <= 350.0 {
        let s = (0.5 * x).sinh();
        ((4.0 / 3.0) * s * s).ln_1p()
    } else {
        x - 3.0f64.ln() + (-x).exp().ln_1p()
    }
}

/// log((2A^2 + G^2)/3G^2); same overflow guard.
fn lam_two_a_sq_plus_g_sq_third(x: f64) -> f64 {
    if x <= 350.0 {
        let s = x.sinh();
        ((2.0 / 3.0) * s * s).ln_1p()
    } else {
        2.0 * x - 6.0f64.ln() + (4.0 * (-2.0 * x).exp()).ln_1p()
    }
}

/// log of L·(I − L)/(L − G) at G = 1.  With d = log(I/L) this equals
/// 2·log L + log(d / log L) + log((e^d − 1)/d) − log((e^log L − 1)/log L).
fn lam_l_times_slope(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0; // limit: the term tends to G as the pair degenerates
    }
    let ll = lam_l(x);
    let d = lam_i(x) - ll;
    2.0 * ll + (d / ll).ln() + log_expm1_ratio(d) - log_expm1_ratio(ll)
}

fn pr(u: f64, v: f64) -> PositivePair {
    PositivePair::new(u, v).expect("term arguments are positive and finite")
}

fn term<L, D>(label: &'static str, degree: u8, log_fn: L, direct: D) -> Term
where
    L: Fn(f64) -> f64 + Send + Sync + 'static,
    D: Fn(&PositivePair) -> f64 + Send + Sync + 'static,
{
    Term {
        label,
        degree,
        log_fn: Box::new(log_fn),
        direct: Box::new(direct),
    }
}

/// A primitive mean as a degree-1 term.
fn t_mean(kind: MeanKind) -> Term {
    term(
        kind.symbol(),
        1,
        move |x| log_ratio(kind, x),
        move |p| mean(kind, p),
    )
}

/// M(left, right) over the primitive means of the pair, degree 1.
fn t_comp(label: &'static str, outer: MeanKind, left: MeanKind, right: MeanKind) -> Term {
    term(
        label,
        1,
        move |x| compose(outer, log_ratio(left, x), log_ratio(right, x)),
        move |p| mean(outer, &pr(mean(left, p), mean(right, p))),
    )
}

/// M(left^2, right^2) over squared primitive means, degree 2.
fn t_comp_sq(label: &'static str, outer: MeanKind, left: MeanKind, right: MeanKind) -> Term {
    term(
        label,
        2,
        move |x| compose(outer, 2.0 * log_ratio(left, x), 2.0 * log_ratio(right, x)),
        move |p| {
            let u = mean(left, p);
            let v = mean(right, p);
            mean(outer, &pr(u * u, v * v))
        },
    )
}

fn none_overrides(n: usize) -> Vec<Option<MarginOverride>> {
    (0..n).map(|_| None).collect()
}

fn strict_chain(name: &'static str, anchor: &'static str, terms: Vec<Term>) -> InequalitySpec {
    let n = terms.len();
    assert!(n >= 2);
    InequalitySpec {
        name,
        kind: Kind::StrictChain,
        anchor,
        links: vec![LinkKind::Strict; n - 1],
        margin_overrides: none_overrides(n - 1),
        terms,
        domain: (0.0, f64::INFINITY),
        witnesses: Vec::new(),
    }
}

fn identity(name: &'static str, anchor: &'static str, lhs: Term, rhs: Term) -> InequalitySpec {
    InequalitySpec {
        name,
        kind: Kind::Identity,
        anchor,
        terms: vec![lhs, rhs],
        links: Vec::new(),
        margin_overrides: Vec::new(),
        domain: (0.0, f64::INFINITY),
        witnesses: Vec::new(),
    }
}

fn incomparable(
    name: &'static str,
    anchor: &'static str,
    first: Term,
    second: Term,
    witnesses: Vec<Witness>,
) -> InequalitySpec {
    InequalitySpec {
        name,
        kind: Kind::Incomparable,
        anchor,
        terms: vec![first, second],
        links: Vec::new(),
        margin_overrides: Vec::new(),
        domain: (0.0, f64::INFINITY),
        witnesses,
    }
}

fn wit(x: f64, first_larger: bool) -> Witness {
    Witness { x, first_larger }
}

/// Relative gap log((A+G)/(I+L)) by series for small x, where the direct
/// log-difference would be cancellation noise; coefficients fitted against
/// a high-precision expansion (leading term x^6/6480).
fn alzer_gap_margin(x: f64) -> f64 {
    if x < 0.2 {
        let x2 = x * x;
        let gap = x2
            * x2
            * x2
            * (1.0 / 6480.0 + x2 * (-3.78453850675707085749e-5 + x2 * 5.97074204674024384731e-6));
        gap.exp_m1()
    } else {
        let hi = compose(Arithmetic, lam_a(x), 0.0);
        let lo = compose(Arithmetic, lam_i(x), lam_l(x));
        (hi - lo).exp_m1()
    }
}

/// Relative gap log(S(Q,G)/A) by series for small x (leading term x^8/48);
/// the direct log-difference loses all digits below x ≈ 0.02.
fn sqg_over_a_margin(x: f64) -> f64 {
    if x <= 0.02 {
        let x2 = x * x;
        let x8 = x2 * x2 * x2 * x2;
        let gap = x8 * (1.0 / 48.0 + x2 * (-1.0 / 18.0 + x2 * 0.105784530289252046616));
        gap.exp_m1()
    } else {
        let hi = compose(WeightedS, log_ratio(RootSquare, x), 0.0);
        (hi - lam_a(x)).exp_m1()
    }
}

/// All built-in claims, in registry order.
pub fn builtin_registry() -> Vec<InequalitySpec> {
    let two_over_sqrt_e = 2.0 / E.sqrt();

    let t_sqrt_ia2g2 = || {
        term(
            "sqrt(I(A^2,G^2))",
            1,
            |x| 0.5 * compose(Identric, 2.0 * lam_a(x), 0.0),
            |p| {
                let a = mean(Arithmetic, p);
                let g = mean(Geometric, p);
                mean(Identric, &pr(a * a, g * g)).sqrt()
            },
        )
    };
    let t_qag = || t_comp("Q(A,G)", RootSquare, Arithmetic, Geometric);
    let t_two_a_plus_g_third = || {
        term("(2A+G)/3", 1, lam_two_a_plus_g_third, |p| {
            (2.0 * mean(Arithmetic, p) + mean(Geometric, p)) / 3.0
        })
    };
    let t_i_sq = || {
        term(
            "I^2",
            2,
            |x| 2.0 * lam_i(x),
            |p| {
                let i = mean(Identric, p);
                i * i
            },
        )
    };
    let t_l_sq = || {
        term(
            "L^2",
            2,
            |x| 2.0 * lam_l(x),
            |p| {
                let l = mean(Logarithmic, p);
                l * l
            },
        )
    };
    let t_half_a_plus_g = || {
        term(
            "(A+G)/2",
            1,
            |x| compose(Arithmetic, lam_a(x), 0.0),
            |p| 0.5 * (mean(Arithmetic, p) + mean(Geometric, p)),
        )
    };
    let t_lig = || t_comp("L(I,G)", Logarithmic, Identric, Geometric);

    let mut thm1 = strict_chain(
        "thm1",
        "sqrt(I(A^2,G^2)) < I < (2/sqrt(e))*sqrt(I(A^2,G^2)) for a != b, with both constants sharp",
        vec![
            term(
                "(2/sqrt(e))*sqrt(I(A^2,G^2))",
                1,
                |x| LN_2 - 0.5 + 0.5 * compose(Identric, 2.0 * lam_a(x), 0.0),
                move |p| {
                    let a = mean(Arithmetic, p);
                    let g = mean(Geometric, p);
                    two_over_sqrt_e * mean(Identric, &pr(a * a, g * g)).sqrt()
                },
            ),
            t_mean(Identric),
            t_sqrt_ia2g2(),
        ],
    );
    // Both link gaps equal dedicated gap functions of the scalar analysis
    // layer, which keep full relative precision at every x (the raw log
    // difference saturates once the gap drops below f64 epsilon times the
    // logarithms).  Past x ≈ 350 the upper gap underflows to zero, so the
    // claim is only asserted there.
    thm1.margin_overrides[0] = Some(Box::new(|x| f_thm1_upper_gap(x).exp_m1()));
    thm1.margin_overrides[1] = Some(Box::new(|x| f_thm1_lower_gap(x).exp_m1()));
    thm1.domain = (0.0, 350.0);

    let thm2 = strict_chain(
        "thm2",
        "Q(A,G) < I < sqrt(c)*Q(A,G), where c is the sharp constant attained at the interior maximizer x1",
        vec![
            term(
                "sqrt(c)*Q(A,G)",
                1,
                |x| 0.5 * ln_c() + compose(RootSquare, lam_a(x), 0.0),
                |p| {
                    let c = ln_c().exp();
                    c.sqrt() * mean(RootSquare, &pr(mean(Arithmetic, p), mean(Geometric, p)))
                },
            ),
            t_mean(Identric),
            t_qag(),
        ],
    );

    let chain_3005c = strict_chain(
        "chain_3005c",
        "sqrt(I(A^2,G^2)) < Q(A,G) < I",
        vec![t_mean(Identric), t_qag(), t_sqrt_ia2g2()],
    );

    let sandor_sq = strict_chain(
        "sandor_sq",
        "I^2 < I(a^2,b^2)",
        vec![
            term(
                "I(a^2,b^2)",
                2,
                |x| log_ratio(Identric, 2.0 * x),
                |p| mean(Identric, &pr(p.a() * p.a(), p.b() * p.b())),
            ),
            t_i_sq(),
        ],
    );

    let eq3005e = strict_chain(
        "eq3005e",
        "(2A+G)/3 < I",
        vec![t_mean(Identric), t_two_a_plus_g_third()],
    );

    let eq3005f = strict_chain(
        "eq3005f",
        "I^2 < (2A^2+G^2)/3",
        vec![
            term("(2A^2+G^2)/3", 2, lam_two_a_sq_plus_g_sq_third, |p| {
                let a = mean(Arithmetic, p);
                let g = mean(Geometric, p);
                (2.0 * a * a + g * g) / 3.0
            }),
            t_i_sq(),
        ],
    );

    let mut thm3_chain = strict_chain(
        "thm3_chain",
        "L(A^2,G^2) = ((A+G)/2)*L(A,G) > ((A+G)/2)*L > L^2",
        vec![
            t_comp_sq("L(A^2,G^2)", Logarithmic, Arithmetic, Geometric),
            term(
                "((A+G)/2)*L(A,G)",
                2,
                |x| compose(Arithmetic, lam_a(x), 0.0) + compose(Logarithmic, lam_a(x), 0.0),
                |p| {
                    let a = mean(Arithmetic, p);
                    let g = mean(Geometric, p);
                    0.5 * (a + g) * mean(Logarithmic, &pr(a, g))
                },
            ),
            term(
                "((A+G)/2)*L",
                2,
                |x| compose(Arithmetic, lam_a(x), 0.0) + lam_l(x),
                |p| 0.5 * (mean(Arithmetic, p) + mean(Geometric, p)) * mean(Logarithmic, p),
            ),
            t_l_sq(),
        ],
    );
    thm3_chain.links[0] = LinkKind::Equal;

    let thm3_lig = strict_chain("thm3_LIG", "L(I,G) < L", vec![t_mean(Logarithmic), t_lig()]);

    let thm3_lil = strict_chain(
        "thm3_LIL",
        "L(I,L) lies strictly between L and L*(I-L)/(L-G)",
        vec![
            term("L*(I-L)/(L-G)", 1, lam_l_times_slope, |p| {
                let l = mean(Logarithmic, p);
                let i = mean(Identric, p);
                let g = mean(Geometric, p);
                l * (i - l) / (l - g)
            }),
            t_comp("L(I,L)", Logarithmic, Identric, Logarithmic),
            t_mean(Logarithmic),
        ],
    );

    let coro_711a = strict_chain(
        "coro_711a",
        "G*I/L < sqrt(I*G) < L(I,G) < L",
        vec![
            t_mean(Logarithmic),
            t_lig(),
            term(
                "sqrt(I*G)",
                1,
                |x| 0.5 * lam_i(x),
                |p| (mean(Identric, p) * mean(Geometric, p)).sqrt(),
            ),
            term(
                "G*I/L",
                1,
                |x| lam_i(x) - lam_l(x),
                |p| mean(Geometric, p) * mean(Identric, p) / mean(Logarithmic, p),
            ),
        ],
    );

    let coro_711b = strict_chain(
        "coro_711b",
        "L(I,G)^2 < L*L(I,G) < L(I^2,G^2) < L*(I+G)/2",
        vec![
            term(
                "L*(I+G)/2",
                2,
                |x| lam_l(x) + compose(Arithmetic, lam_i(x), 0.0),
                |p| mean(Logarithmic, p) * 0.5 * (mean(Identric, p) + mean(Geometric, p)),
            ),
            t_comp_sq("L(I^2,G^2)", Logarithmic, Identric, Geometric),
            term(
                "L*L(I,G)",
                2,
                |x| lam_l(x) + compose(Logarithmic, lam_i(x), 0.0),
                |p| {
                    mean(Logarithmic, p)
                        * mean(Logarithmic, &pr(mean(Identric, p), mean(Geometric, p)))
                },
            ),
            term(
                "L(I,G)^2",
                2,
                |x| 2.0 * compose(Logarithmic, lam_i(x), 0.0),
                |p| {
                    let v = mean(Logarithmic, &pr(mean(Identric, p), mean(Geometric, p)));
                    v * v
                },
            ),
        ],
    );

    let in_10 = strict_chain(
        "in_10",
        "L < (I+G)/2",
        vec![
            term(
                "(I+G)/2",
                1,
                |x| compose(Arithmetic, lam_i(x), 0.0),
                |p| 0.5 * (mean(Identric, p) + mean(Geometric, p)),
            ),
            t_mean(Logarithmic),
        ],
    );

    let eq611d = strict_chain(
        "eq611d",
        "L < (A+G)/2",
        vec![t_half_a_plus_g(), t_mean(Logarithmic)],
    );

    let identity_s = identity(
        "identity_S",
        "S = I(a^2,b^2)/I",
        t_mean(WeightedS),
        term(
            "I(a^2,b^2)/I",
            1,
            |x| log_ratio(Identric, 2.0 * x) - lam_i(x),
            |p| mean(Identric, &pr(p.a() * p.a(), p.b() * p.b())) / mean(Identric, p),
        ),
    );

    let mut thm4_chain = strict_chain(
        "thm4_chain",
        "I < A < S(Q,G)",
        vec![
            t_comp("S(Q,G)", WeightedS, RootSquare, Geometric),
            t_mean(Arithmetic),
            t_mean(Identric),
        ],
    );
    thm4_chain.margin_overrides[0] = Some(Box::new(sqg_over_a_margin));

    let thm4_iqg = strict_chain(
        "thm4_IQG",
        "I(Q,G) < A",
        vec![
            t_mean(Arithmetic),
            t_comp("I(Q,G)", Identric, RootSquare, Geometric),
        ],
    );

    let rasa_sq = strict_chain(
        "rasa_SQ",
        "Q < S",
        vec![t_mean(WeightedS), t_mean(RootSquare)],
    );

    let mut alzer_sum = strict_chain(
        "alzer_sum",
        "I + L < A + G",
        vec![
            t_half_a_plus_g(),
            term(
                "(I+L)/2",
                1,
                |x| compose(Arithmetic, lam_i(x), lam_l(x)),
                |p| 0.5 * (mean(Identric, p) + mean(Logarithmic, p)),
            ),
        ],
    );
    alzer_sum.margin_overrides[0] = Some(Box::new(alzer_gap_margin));

    let identity_al = identity(
        "identity_AL",
        "log(I/G) = A/L - 1",
        t_mean(Identric),
        term(
            "G*exp(A/L - 1)",
            1,
            |x| crate::stable::x_coth(x) - 1.0,
            |p| mean(Geometric, p) * (mean(Arithmetic, p) / mean(Logarithmic, p) - 1.0).exp(),
        ),
    );

    let sandor_in12 = strict_chain(
        "sandor_in12",
        "1 - G/L < log(I/L)",
        vec![
            term(
                "log(I/L)",
                0,
                |x| (lam_i(x) - lam_l(x)).ln(),
                |p| (mean(Identric, p) / mean(Logarithmic, p)).ln(),
            ),
            term(
                "1 - G/L",
                0,
                |x| (-(-lam_l(x)).exp_m1()).ln(),
                |p| 1.0 - mean(Geometric, p) / mean(Logarithmic, p),
            ),
        ],
    );

    let alzer_lgi = strict_chain(
        "alzer_LGI",
        "sqrt(G*I) < L",
        vec![
            t_mean(Logarithmic),
            term(
                "sqrt(G*I)",
                1,
                |x| 0.5 * lam_i(x),
                |p| (mean(Geometric, p) * mean(Identric, p)).sqrt(),
            ),
        ],
    );

    let seiffert_l2 = strict_chain(
        "seiffert_L2",
        "L^2 < L(A^2,G^2)",
        vec![
            t_comp_sq("L(A^2,G^2)", Logarithmic, Arithmetic, Geometric),
            t_l_sq(),
        ],
    );

    let ns_lag = strict_chain(
        "ns_LAG",
        "L < L(A,G)",
        vec![
            t_comp("L(A,G)", Logarithmic, Arithmetic, Geometric),
            t_mean(Logarithmic),
        ],
    );

    let incomparable_i_sag = incomparable(
        "incomparable_I_SAG",
        "I vs S(A,G): neither dominates; I is larger at x = 1, smaller at x = 3",
        t_mean(Identric),
        t_comp("S(A,G)", WeightedS, Arithmetic, Geometric),
        vec![wit(1.0, true), wit(3.0, false)],
    );

    let incomparable_i_iqg = incomparable(
        "incomparable_I_IQG",
        "I(Q,G) vs I: neither dominates; I(Q,G) is larger at x = 3/2, smaller at x = 2",
        t_comp("I(Q,G)", Identric, RootSquare, Geometric),
        t_mean(Identric),
        vec![wit(1.5, true), wit(2.0, false)],
    );

    let noncomparable_thm2_3005e = incomparable(
        "noncomparable_thm2_3005e",
        "Q(A,G) vs (2A+G)/3: neither lower bound for I dominates the other",
        t_qag(),
        t_two_a_plus_g_third(),
        vec![wit(1.0, false), wit(4.0, true)],
    );

    let noncomparable_3005f_thm2right = incomparable(
        "noncomparable_3005f_thm2right",
        "(2A^2+G^2)/3 vs c*(A^2+G^2)/2: neither upper bound for I^2 dominates the other",
        term("(2A^2+G^2)/3", 2, lam_two_a_sq_plus_g_sq_third, |p| {
            let a = mean(Arithmetic, p);
            let g = mean(Geometric, p);
            (2.0 * a * a + g * g) / 3.0
        }),
        term(
            "c*(A^2+G^2)/2",
            2,
            |x| ln_c() + 2.0 * compose(RootSquare, lam_a(x), 0.0),
            |p| {
                let a = mean(Arithmetic, p);
                let g = mean(Geometric, p);
                ln_c().exp() * 0.5 * (a * a + g * g)
            },
        ),
        vec![wit(0.5, false), wit(3.0, true)],
    );

    vec![
        thm1,
        thm2,
        chain_3005c,
        sandor_sq,
        eq3005e,
        eq3005f,
        thm3_chain,
        thm3_lig,
        thm3_lil,
        coro_711a,
        coro_711b,
        in_10,
        eq611d,
        identity_s,
        thm4_chain,
        thm4_iqg,
        rasa_sq,
        alzer_sum,
        identity_al,
        sandor_in12,
        alzer_lgi,
        seiffert_l2,
        ns_lag,
        incomparable_i_sag,
        incomparable_i_iqg,
        noncomparable_thm2_3005e,
        noncomparable_3005f_thm2right,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{from_param, Param};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn registry_has_expected_entries() {
        let reg = builtin_registry();
        assert_eq!(reg.len(), 27);
        let names: Vec<_> = reg.iter().map(|s| s.name).collect();
        let expected = [
            "thm1",
            "thm2",
            "chain_3005c",
            "sandor_sq",
            "eq3005e",
            "eq3005f",
            "thm3_chain",
            "thm3_LIG",
            "thm3_LIL",
            "coro_711a",
            "coro_711b",
            "in_10",
            "eq611d",
            "identity_S",
            "thm4_chain",
            "thm4_IQG",
            "rasa_SQ",
            "alzer_sum",
            "identity_AL",
            "sandor_in12",
            "alzer_LGI",
            "seiffert_L2",
            "ns_LAG",
            "incomparable_I_SAG",
            "incomparable_I_IQG",
            "noncomparable_thm2_3005e",
            "noncomparable_3005f_thm2right",
        ];
        assert_eq!(names, expected);
        let mut unique = names.clone();
        unique.sort_unstable();
        unique.dedup();
        assert_eq!(unique.len(), 27, "names must be unique");
    }

    #[test]
    fn shapes_are_consistent() {
        for spec in builtin_registry() {
            match spec.kind {
                Kind::StrictChain => {
                    assert!(spec.terms.len() >= 2, "{}", spec.name);
                    assert_eq!(spec.links.len(), spec.terms.len() - 1, "{}", spec.name);
                    assert_eq!(
                        spec.margin_overrides.len(),
                        spec.links.len(),
                        "{}",
                        spec.name
                    );
                    assert!(spec.witnesses.is_empty(), "{}", spec.name);
                }
                Kind::Identity => {
                    assert_eq!(spec.terms.len(), 2, "{}", spec.name);
                    assert!(spec.links.is_empty(), "{}", spec.name);
                }
                Kind::Incomparable => {
                    assert_eq!(spec.terms.len(), 2, "{}", spec.name);
                    assert!(spec.witnesses.len() >= 2, "{}", spec.name);
                    assert!(
                        spec.witnesses.iter().any(|w| w.first_larger)
                            && spec.witnesses.iter().any(|w| !w.first_larger),
                        "{}: witnesses must claim both orderings",
                        spec.name
                    );
                }
            }
            assert!(spec.domain.0 < spec.domain.1, "{}", spec.name);
            let degrees: Vec<_> = spec.terms.iter().map(|t| t.degree).collect();
            assert!(
                degrees.iter().all(|&d| d == degrees[0]),
                "{}: mixed degrees {:?}",
                spec.name,
                degrees
            );
        }
    }

    /// Every term's closed-form logarithm must agree with evaluating the
    /// term from its defining formula at an explicit pair.  This pins the
    /// composed log expressions to the definitions.
    #[test]
    fn log_forms_match_direct_evaluation() {
        for spec in builtin_registry() {
            for &x in &[0.25, 1.0, 2.7] {
                let p = from_param(&Param { scale: 1.0, x }).unwrap();
                for t in &spec.terms {
                    let lam = (t.log_fn)(x);
                    let direct = (t.direct)(&p);
                    assert!(direct > 0.0, "{}: {} at x={x}", spec.name, t.label);
                    assert_relative_eq!(lam, direct.ln(), max_relative = 1e-11, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn sharp_constant_c_is_frozen() {
        assert_abs_diff_eq!(ln_c(), 0.131281010811814368064, epsilon = 1e-13);
        assert_abs_diff_eq!(ln_c().exp(), 1.14028816959783681930, epsilon = 1e-13);
    }

    #[test]
    fn witness_margins_have_claimed_signs() {
        for spec in builtin_registry() {
            for w in &spec.witnesses {
                let m = spec.link_margin(0, w.x);
                assert_eq!(
                    m > 0.0,
                    w.first_larger,
                    "{}: witness at x={} gave margin {m}",
                    spec.name,
                    w.x
                );
            }
        }
    }

    #[test]
    fn incomparable_witness_margins_match_frozen_values() {
        let reg = builtin_registry();
        let by_name = |n: &str| reg.iter().find(|s| s.name == n).unwrap();

        let m = |n: &str, x: f64| by_name(n).link_margin(0, x);
        assert_relative_eq!(
            m("incomparable_I_SAG", 1.0),
            0.0510896945803637067988,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("incomparable_I_SAG", 3.0),
            -0.0821887674349558479602,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("incomparable_I_IQG", 1.5),
            0.0292765559068322902998,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("incomparable_I_IQG", 2.0),
            -0.0292822480759782401849,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("noncomparable_thm2_3005e", 1.0),
            -0.0454039712049333186013,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("noncomparable_thm2_3005e", 4.0),
            0.0422873236756485366358,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("noncomparable_3005f_thm2right", 0.5),
            -0.0880842656203688507092,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            m("noncomparable_3005f_thm2right", 3.0),
            0.163583267003441294791,
            max_relative = 1e-12
        );
    }

    /// The two series-backed margin overrides against high-precision gap
    /// values, on both sides of their series/direct seams.
    #[test]
    fn override_margins_match_frozen_gaps() {
        // log((A+G)/(I+L)); margins are expm1 of these.
        for (x, gap) in [
            (0.01f64, 1.54317203175521005361e-16f64),
            (0.02, 9.87557442915626027725e-15),
            (0.05, 2.40978767964364325558e-12),
            (1.0, 0.000121771391033105852616),
            (30.0, 0.262544400312081896059),
        ] {
            assert_relative_eq!(
                alzer_gap_margin(x),
                gap.exp_m1(),
                max_relative = 5e-7,
                epsilon = 1e-300
            );
        }
        // log(S(Q,G)/A).
        for (x, gap) in [
            (0.01f64, 2.08277788354691205083e-18f64),
            (0.02, 5.32764877454970720184e-16),
            (0.05, 8.08402454174841017379e-13),
            (1.0, 0.00335219283944146457285),
            (30.0, 0.346573590276048415945),
        ] {
            assert_relative_eq!(
                sqg_over_a_margin(x),
                gap.exp_m1(),
                max_relative = 5e-7,
                epsilon = 1e-300
            );
        }
    }

    /// The upper-bound scalar of sandor_in12 equals the top term of
    /// thm3_LIL's chain divided by L(I,L): both margins must coincide.
    #[test]
    fn lil_slope_margin_equals_scalar_form() {
        let reg = builtin_registry();
        let lil = reg.iter().find(|s| s.name == "thm3_LIL").unwrap();
        let scalar = reg.iter().find(|s| s.name == "sandor_in12").unwrap();
        // Both routes take logs of ~x²/6-sized quantities, whose last-bit
        // rounding (~2e-15 absolute on the log) bounds how closely they can
        // agree when the margin itself is tiny; hence the absolute floor.
        for &x in &[1e-4, 0.03, 0.7, 2.0, 11.0, 30.0] {
            assert_relative_eq!(
                lil.link_margin(0, x),
                scalar.link_margin(0, x),
                max_relative = 1e-9,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn term_values_scale_with_degree() {
        let reg = builtin_registry();
        let spec = &reg[0];
        let v1 = spec.term_value(0, 1.0, 1.0);
        let v2 = spec.term_value(0, 1.0, 7.0);
        assert_relative_eq!(v2, 7.0 * v1, max_relative = 1e-14);
        let sq = reg.iter().find(|s| s.name == "sandor_sq").unwrap();
        let w1 = sq.term_value(0, 1.0, 1.0);
        let w2 = sq.term_value(0, 1.0, 7.0);
        assert_relative_eq!(w2, 49.0 * w1, max_relative = 1e-14);
    }
}

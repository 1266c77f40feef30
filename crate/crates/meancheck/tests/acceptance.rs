//! End-to-end acceptance checks.  Each test covers one exit criterion and
//! prints a single summary line on success (visible with --nocapture); a
//! failed assertion fails the corresponding test.

use std::time::Instant;

use meancheck::analysis::{
    counterexample_1711, crossing_i_vs_sag, f_lemma2, f_thm1, f_thm1_deriv_identity, g_lemma2,
};
use meancheck::{
    builtin_registry, from_param, log_ratio, mean, ratio, sharp_constants, sharpness_probe,
    to_param, verify, Grid, MeanKind, PositivePair, Spacing, Status, VerifyOptions,
};
use rand::{Rng, SeedableRng};

fn constant(name: &str) -> f64 {
    sharp_constants()
        .unwrap()
        .into_iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no constant named {name}"))
        .value
}

#[test]
fn acceptance_1_sharp_constants_reproduce() {
    let t = Instant::now();
    let x1 = constant("x1");
    let f_max = constant("f_lemma2_max");
    let c = constant("c");
    let elapsed = t.elapsed();

    assert!((x1 - 1.606).abs() <= 1e-3, "x1 = {x1}");
    assert!((f_max - 2.1312).abs() <= 1e-3, "f(x1) = {f_max}");
    assert!((1.135..=1.145).contains(&c), "c = {c}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("acceptance 1: pass — x1 = {x1:.6}, f(x1) = {f_max:.6}, c = {c:.6} in {elapsed:?}");
}

#[test]
fn acceptance_2_limits_at_both_ends() {
    let ln2 = std::f64::consts::LN_2;
    let checks = [
        ("f_thm1(1e-6)", f_thm1(1e-6).unwrap(), 0.5, 1e-6),
        ("f_thm1(50)", f_thm1(50.0).unwrap(), ln2, 1e-6),
        ("f_lemma2(1e-6)", f_lemma2(1e-6).unwrap(), 2.0, 1e-5),
        ("f_lemma2(50)", f_lemma2(50.0).unwrap(), 3.0 * ln2, 1e-6),
    ];
    for (label, got, want, tol) in checks {
        assert!(
            (got - want).abs() <= tol,
            "{label} = {got}, want {want} ± {tol}"
        );
    }
    println!("acceptance 2: pass — all four limit values within tolerance");
}

#[test]
fn acceptance_3_sample_values() {
    let g1 = g_lemma2(1.0);
    let g32 = g_lemma2(1.5);
    let g2 = g_lemma2(2.0);
    assert!((0.2..0.3).contains(&g1), "g(1) = {g1}");
    assert!((0.15..0.25).contains(&g32), "g(3/2) = {g32}");
    assert!((-3.1..-2.9).contains(&g2), "g(2) = {g2}");
    assert!((1.0_f64.tanh() - 0.7615).abs() <= 5e-4);
    assert!((1.5_f64.tanh() - 0.9051).abs() <= 5e-4);
    println!(
        "acceptance 3: pass — g(1) = {g1:.4}, g(3/2) = {g32:.4}, g(2) = {g2:.4}, tanh checks ok"
    );
}

#[test]
fn acceptance_4_full_registry_sweep() {
    let t = Instant::now();
    let registry = builtin_registry();
    let grid = Grid::default_sweep();
    let opts = VerifyOptions::default();
    assert_eq!(grid.points, 2001);
    let mut worst = f64::INFINITY;
    for spec in &registry {
        let report = verify(spec, &grid, &opts).unwrap();
        assert_eq!(report.status, Status::Pass, "{} failed", spec.name);
        assert!(report.min_margin > 0.0, "{} has zero margin", spec.name);
        worst = worst.min(report.min_margin);
    }
    let elapsed = t.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "acceptance 4: pass — {} entries, worst margin {worst:.3e}, {elapsed:?} \
         (identity residuals ≤ 1e-12 enforced by the identity margin rule)",
        registry.len()
    );
}

#[test]
fn acceptance_5_incomparability_witnesses() {
    let crossing = crossing_i_vs_sag().unwrap();
    assert!(crossing > 2.2 && crossing <= 2.284, "crossing = {crossing}");
    let (at_three_halves, at_two) = counterexample_1711();
    assert!(
        at_three_halves > 0.0,
        "difference at 3/2 = {at_three_halves}"
    );
    assert!(at_two < 0.0, "difference at 2 = {at_two}");
    println!(
        "acceptance 5: pass — crossing at {crossing:.6} ∈ (2.2, 2.284], \
         differences {at_three_halves:+.4} at 3/2 and {at_two:+.4} at 2"
    );
}

#[test]
fn acceptance_6_sharpness_probes() {
    let (thm1_low, thm1_high) = sharpness_probe("thm1").unwrap();
    assert!(thm1_low <= 1e-5, "thm1 gap to 1 at small x: {thm1_low}");
    assert!(
        thm1_high <= 1e-5,
        "thm1 gap to 2/sqrt(e) at large x: {thm1_high}"
    );
    let (thm2_low, thm2_at_x1) = sharpness_probe("thm2").unwrap();
    assert!(thm2_low <= 1e-5, "thm2 gap to 1 at small x: {thm2_low}");
    assert!(thm2_at_x1 <= 1e-6, "thm2 gap to c at x1: {thm2_at_x1}");
    println!(
        "acceptance 6: pass — probe gaps {thm1_low:.2e}/{thm1_high:.2e} (thm1), \
         {thm2_low:.2e}/{thm2_at_x1:.2e} (thm2)"
    );
}

#[test]
fn acceptance_7_randomized_property_suite() {
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0x6d65616e);
    let order = [
        MeanKind::Geometric,
        MeanKind::Logarithmic,
        MeanKind::Identric,
        MeanKind::Arithmetic,
        MeanKind::RootSquare,
        MeanKind::WeightedS,
    ];
    for _ in 0..10_000 {
        // ratio a/b log-uniform in (1, 1e6), magnitude log-uniform in
        // (1e-3, 1e3); comparisons allow one part in 1e13 for rounding.
        let log_ratio_ab: f64 = rng.random_range(1e-12..6.0 * std::f64::consts::LN_10);
        let b: f64 = rng.random_range(-10.0..10.0_f64).exp2();
        let a = b * log_ratio_ab.exp();
        let pair = PositivePair::new(a, b).unwrap();
        let swapped = PositivePair::new(b, a).unwrap();
        let t: f64 = rng.random_range(0.25..4.0);
        let scaled = PositivePair::new(t * a, t * b).unwrap();

        let (lo, hi) = (a.min(b), a.max(b));
        let mut prev = 0.0;
        for kind in order {
            let m = mean(kind, &pair);
            // symmetry
            assert_eq!(
                m,
                mean(kind, &swapped),
                "{kind:?} not symmetric at ({a}, {b})"
            );
            // homogeneity
            let ms = mean(kind, &scaled);
            assert!(
                (ms - t * m).abs() <= 1e-12 * t * m,
                "{kind:?} not homogeneous at ({a}, {b}), t = {t}"
            );
            // betweenness
            assert!(
                m >= lo * (1.0 - 1e-13) && m <= hi * (1.0 + 1e-13),
                "{kind:?} = {m} outside [{lo}, {hi}]"
            );
            // full ordering G ≤ L ≤ I ≤ A ≤ Q ≤ S (one-ulp slack)
            assert!(
                m >= prev * (1.0 - 1e-15),
                "{kind:?} = {m} below predecessor {prev} at ({a}, {b})"
            );
            prev = m;
        }

        // diagonal continuity: a 1e-12 relative perturbation moves every
        // mean by at most that much (plus rounding), and the exact diagonal
        // reproduces the argument
        let near = PositivePair::new(b * (1.0 + 1e-12), b).unwrap();
        for kind in order {
            assert!(
                (mean(kind, &near) - b).abs() <= 2e-12 * b,
                "{kind:?} near diagonal"
            );
            assert_eq!(mean(kind, &PositivePair::new(b, b).unwrap()), b);
        }

        // parameterization round-trip and ratio consistency
        let p = to_param(&pair);
        let back = from_param(&p).unwrap();
        assert!((back.a() - a).abs() <= 1e-12 * a);
        assert!((back.b() - b).abs() <= 1e-12 * b);
        for kind in order {
            let via_ratio = p.scale * ratio(kind, p.x);
            let m = mean(kind, &pair);
            assert!(
                (via_ratio - m).abs() <= 1e-11 * m,
                "{kind:?} ratio route disagrees at ({a}, {b})"
            );
            let lr = log_ratio(kind, p.x);
            assert!((lr.exp() - ratio(kind, p.x)).abs() <= 1e-12 * ratio(kind, p.x));
        }
    }
    println!(
        "acceptance 7: pass — 10000 randomized pairs: symmetry, homogeneity, \
         betweenness, ordering, diagonal continuity, round-trip, ratio consistency"
    );
}

#[test]
fn acceptance_8_derivative_identity() {
    let grid = Grid::new(0.01, 20.0, 500, Spacing::Linear).unwrap();
    let mut worst: f64 = 0.0;
    for x in grid.iter() {
        let (lhs, rhs) = f_thm1_deriv_identity(x);
        let err = (lhs - rhs).abs();
        let allowed = 1e-6_f64.max(1e-6 * rhs.abs());
        assert!(err <= allowed, "identity off by {err:e} at x = {x}");
        worst = worst.max(err / allowed);
    }
    println!(
        "acceptance 8: pass — 500 points on [0.01, 20], worst error {worst:.3e} \
         of the allowed budget"
    );
}

//! The substitution a = G·eˣ, b = G·e⁻ˣ with x = ½·log(a/b) turns every
//! mean ratio into a smooth even function of x:
//!
//!   A/G = cosh x      L/G = sinh x / x     I/G = e^(x·coth x − 1)
//!   Q/G = sqrt(cosh 2x)                    S/G = e^(x·tanh x)
//!
//! This example shows the round trip pair ↔ (scale, x), the ratio table,
//! and why the log-ratio form keeps working where the ratios themselves
//! overflow f64.
//!
//! Run with: cargo run --example hyperbolic_parameterization

use meancheck::{from_param, log_ratio, mean, ratio, to_param, MeanKind, Param, PositivePair};

fn main() {
    // Round trip: pair -> (scale, x) -> pair.
    let p = PositivePair::new(7.5, 0.3).unwrap();
    let param = to_param(&p);
    println!("pair (7.5, 0.3):");
    println!("  scale G = {:.15}", param.scale);
    println!("  x       = {:.15}", param.x);
    let back = from_param(&param).unwrap();
    assert!((back.a() - p.a()).abs() <= 1e-12 * p.a());
    assert!((back.b() - p.b()).abs() <= 1e-12 * p.b());
    println!("  round trip recovers the pair\n");

    // Ratio table at x = 1: mean(kind, pair)/G equals ratio(kind, x).
    let x = 1.0;
    let pair = from_param(&Param { scale: 1.0, x }).unwrap();
    println!("ratios at x = 1 (pair = (e, 1/e), G = 1):");
    for kind in MeanKind::ALL {
        let via_table = ratio(kind, x);
        let via_pair = mean(kind, &pair);
        assert!((via_table - via_pair).abs() <= 1e-14 * via_table.abs());
        println!("  {:<2}/G = {:.15}", kind.symbol(), via_table);
    }

    // x is signed by the argument order, but every ratio is even in x.
    let swapped = to_param(&PositivePair::new(0.3, 7.5).unwrap());
    assert_eq!(swapped.x, -param.x);
    assert_eq!(
        ratio(MeanKind::Identric, -1.3),
        ratio(MeanKind::Identric, 1.3)
    );
    println!("\nswapping the arguments flips the sign of x; ratios are even");

    // At x = 800, cosh x overflows f64, so A/G is not representable — but
    // its logarithm is, and all comparisons in this crate happen there.
    let x = 800.0;
    assert!(ratio(MeanKind::Arithmetic, x).is_infinite());
    println!("\nat x = 800 the ratios overflow, their logs do not:");
    for kind in MeanKind::ALL {
        println!("  log({}/G) = {:.15}", kind.symbol(), log_ratio(kind, x));
    }

    // Near the diagonal the parameter resolves the stored gap to the last
    // bit, where subtracting two computed logarithms would lose most of it.
    // For a pair (1 + d, 1) the parameter is d/2 + O(d^2); the increment d
    // below is whatever double 1.0 + 1e-13 actually stores (~0.9992e-13).
    let near = PositivePair::new(1.0 + 1e-13, 1.0).unwrap();
    let xp = to_param(&near).x;
    let d = (1.0 + 1e-13) - 1.0;
    println!("\nx for the pair (1+1e-13, 1) = {:.6e}", xp);
    assert!((xp - d / 2.0).abs() < 1e-26);
}

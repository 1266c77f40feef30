//! Evaluate the six means at a few pairs, show the universal strict
//! ordering G < L < I < A < Q < S, and demonstrate that evaluation stays
//! accurate for nearly equal and for wildly separated arguments.
//!
//! Run with: cargo run --example evaluate_means

use meancheck::{eval_expr, mean, MeanExpr, MeanKind, PositivePair, Power};

fn main() {
    // A familiar pair.
    let p = PositivePair::new(4.0, 1.0).unwrap();
    println!("means of (4, 1):");
    for kind in MeanKind::ALL {
        println!("  {:<2} = {:.15}", kind.symbol(), mean(kind, &p));
    }

    // The strict ordering holds for every pair with a != b.
    let values: Vec<f64> = [
        MeanKind::Geometric,
        MeanKind::Logarithmic,
        MeanKind::Identric,
        MeanKind::Arithmetic,
        MeanKind::RootSquare,
        MeanKind::WeightedS,
    ]
    .into_iter()
    .map(|k| mean(k, &p))
    .collect();
    assert!(values.windows(2).all(|w| w[0] < w[1]));
    println!("ordering G < L < I < A < Q < S confirmed\n");

    // Nearly equal arguments: naive formulas like (a-b)/log(a/b) lose all
    // digits here; the library keeps full precision.  Every mean of
    // (1 + 1e-13, 1) must lie strictly between the arguments.
    let q = PositivePair::new(1.0 + 1e-13, 1.0).unwrap();
    println!("means of (1+1e-13, 1):");
    for kind in MeanKind::ALL {
        let m = mean(kind, &q);
        assert!((1.0..=1.0 + 1e-13).contains(&m));
        println!("  {:<2} = {:.17}", kind.symbol(), m);
    }
    println!("all lie strictly between the arguments\n");

    // Widely separated arguments do not overflow intermediates.
    let w = PositivePair::new(1e12, 1.0).unwrap();
    println!("means of (1e12, 1):");
    for kind in MeanKind::ALL {
        println!("  {:<2} = {:.10e}", kind.symbol(), mean(kind, &w));
    }

    // Composed expressions: I(A^2, G^2) and S(Q, G), built as expression
    // trees and evaluated at the same pair.
    let i_a2g2 = MeanExpr::composed(
        MeanKind::Identric,
        MeanExpr::Primitive(MeanKind::Arithmetic),
        MeanExpr::Primitive(MeanKind::Geometric),
        Power::Two,
    );
    let s_qg = MeanExpr::composed(
        MeanKind::WeightedS,
        MeanExpr::Primitive(MeanKind::RootSquare),
        MeanExpr::Primitive(MeanKind::Geometric),
        Power::One,
    );
    println!("\ncomposed values at (4, 1):");
    println!("  I(A^2,G^2) = {:.15}", eval_expr(&i_a2g2, &p).unwrap());
    println!("  S(Q,G)     = {:.15}", eval_expr(&s_qg, &p).unwrap());
}

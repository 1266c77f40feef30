//! Incomparability claims: two expressions whose difference changes sign,
//! so neither dominates the other. A passing report needs evidence on BOTH
//! sides; witnesses pin the sign at specific parameter values even when the
//! sweep grid misses one side.
//!
//! Run with: cargo run --example incomparability

use meancheck::{builtin_registry, verify, Grid, Kind, Spacing, Status, VerifyOptions};

fn main() {
    let registry = builtin_registry();
    let grid = Grid::default_sweep();
    let opts = VerifyOptions::default();

    println!("entries claiming a sign change (neither side dominates):\n");
    for spec in registry.iter().filter(|s| s.kind == Kind::Incomparable) {
        let report = verify(spec, &grid, &opts).unwrap();
        assert_eq!(report.status, Status::Pass);
        println!("  {:<30} {}", spec.name, spec.anchor);
        for w in &spec.witnesses {
            let side = if w.first_larger { ">" } else { "<" };
            println!("      witness x = {:<4} first {} second", w.x, side);
        }
        println!(
            "      weaker side has margin {:.5e} (argmin x = {:.6})\n",
            report.min_margin, report.argmin_x
        );
    }

    // Locate the crossing of the first incomparable pair by bisecting the
    // sign of the difference of the two term logs.
    let spec = registry
        .iter()
        .find(|s| s.name == "incomparable_I_SAG")
        .unwrap();
    let diff = |x: f64| (spec.terms[0].log_fn)(x) - (spec.terms[1].log_fn)(x);
    let (mut lo, mut hi) = (1.0_f64, 3.0_f64);
    assert!(diff(lo) > 0.0 && diff(hi) < 0.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if diff(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    println!(
        "sign of [{}] flips at x = {:.12} (frozen crossing 2.278845557830)",
        spec.anchor,
        0.5 * (lo + hi)
    );
    assert!((0.5 * (lo + hi) - 2.27884555782988688604).abs() < 1e-10);

    // A grid confined to one side of the crossing sees only one sign. With
    // witnesses disabled the claim cannot be certified and the report fails;
    // the built-in witnesses rescue it.
    let one_sided = Grid::new(2.3, 3.0, 64, Spacing::Linear).unwrap();
    let no_wit = VerifyOptions {
        use_witnesses: false,
        ..VerifyOptions::default()
    };
    let failing = verify(spec, &one_sided, &no_wit).unwrap();
    assert_eq!(failing.status, Status::Fail);
    assert_eq!(failing.min_margin, 0.0);
    println!(
        "\non [2.3, 3] without witnesses: status = {:?} (only one sign observed)",
        failing.status
    );

    let rescued = verify(spec, &one_sided, &opts).unwrap();
    assert_eq!(rescued.status, Status::Pass);
    println!(
        "same grid with witnesses:      status = {:?} (witness at x = 1 supplies the other side)",
        rescued.status
    );
}

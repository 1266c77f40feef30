//! Tabulate the scalar auxiliary functions behind the sharp constants and
//! read off their qualitative behaviour: monotone limits, an interior
//! maximum, and sign changes that locate the frozen roots.
//!
//! Run with: cargo run --example tabulate_functions

use meancheck::analysis::{
    crossing_i_vs_sag, f_lemma2, f_thm1, g_lemma2, h_crossing, k_lemma2, x0_zero_of_k, x1_zero_of_g,
};

fn main() {
    // f_thm1 rises from 1/2 toward log 2; f_lemma2 rises from 2, peaks at x1,
    // and settles toward 3 log 2.
    println!("{:>8}  {:>22}  {:>22}", "x", "f_thm1(x)", "f_lemma2(x)");
    for &x in &[1e-6, 0.01, 0.1, 0.5, 1.0, 1.6061153, 2.0, 5.0, 20.0, 50.0] {
        println!(
            "{:>8}  {:>22.15}  {:>22.15}",
            x,
            f_thm1(x).unwrap(),
            f_lemma2(x).unwrap()
        );
    }
    println!(
        "\nlimits: f_thm1 -> 1/2 = {:.6} and log 2 = {:.6};",
        0.5,
        std::f64::consts::LN_2
    );
    println!(
        "        f_lemma2 -> 2 and 3 log 2 = {:.6}, with an interior max",
        3.0 * std::f64::consts::LN_2
    );

    // k's sign change marks where f_thm1's derivative factor flips; g's marks
    // f_lemma2's maximum; h's marks the comparison crossing.
    println!(
        "\n{:>6}  {:>14}  {:>14}  {:>14}",
        "x", "k(x)", "g(x)", "h(x)"
    );
    for &x in &[0.5, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5] {
        println!(
            "{:>6}  {:>14.6e}  {:>14.6e}  {:>14.6e}",
            x,
            k_lemma2(x),
            g_lemma2(x),
            h_crossing(x)
        );
    }

    // Bracketed sign changes pin the roots; the library's solvers refine them.
    let x0 = x0_zero_of_k().unwrap();
    let x1 = x1_zero_of_g().unwrap();
    let xc = crossing_i_vs_sag().unwrap();
    println!("\nroots refined from those sign changes:");
    println!("  k vanishes at x0 = {x0:.15}");
    println!("  g vanishes at x1 = {x1:.15}  (maximizer of f_lemma2)");
    println!("  h vanishes at    x = {xc:.15}  (comparison crossing)");

    assert!(k_lemma2(x0 - 1e-6) * k_lemma2(x0 + 1e-6) < 0.0);
    assert!(g_lemma2(x1 - 1e-6) * g_lemma2(x1 + 1e-6) < 0.0);
    assert!(h_crossing(xc - 1e-6) * h_crossing(xc + 1e-6) < 0.0);
    assert!((x1 - 1.60611529880276736409).abs() < 1e-12);

    // The maximum value of f_lemma2 fixes the sharp factor c = e^{f(x1) - 2}.
    let f_max = f_lemma2(x1).unwrap();
    println!(
        "\nf_lemma2(x1) = {:.15}, giving c = {:.15}",
        f_max,
        (f_max - 2.0).exp()
    );
}

//! Numerically stable evaluation of six classical bivariate means and
//! machine-checked verification of the inequalities between them.
//!
//! For positive a, b the crate computes the arithmetic (A), geometric (G),
//! logarithmic (L), identric (I), root-square (Q) and exponential-weight (S)
//! means, together with a registry of strict inequality chains, identities,
//! and incomparability claims relating them and their compositions (such as
//! I(A², G²) or S(Q, G)), each verified over sweeps with an explicit
//! positive margin.
//!
//! # Architecture
//!
//! Everything is driven by the hyperbolic substitution a = G·eˣ,
//! b = G·e⁻ˣ with x = ½·log(a/b) ([`param`]).  Mean ratios become smooth
//! even functions of x (A/G = cosh x, L/G = sinh x / x, …), so comparisons
//! between means reduce to differences of log-ratios, evaluated by the
//! cancellation-free kernels in [`stable`].  Relative margins survive down
//! to ~1e-300 this way, far beyond what value-space subtraction could see.
//!
//! * [`means`] — validated pairs, the six means, composed mean expressions.
//! * [`param`] — the substitution and per-mean (log-)ratio tables.
//! * [`stable`] — log-domain kernels (log cosh, log sinhc, x·coth x − 1, …).
//! * [`analysis`] — the scalar functions whose limits and critical points
//!   certify sharp constants, plus a deterministic bracketed root finder.
//! * [`grid`] — log- or linearly-spaced sweep grids.
//! * [`ineq`] — the 27-entry claim registry and the sweep verifier.
//! * [`cli`] — the `meancheck` command-line interface over all of it.
//!
//! # Example
//!
//! ```
//! use meancheck::{builtin_registry, verify, Grid, VerifyOptions};
//!
//! let grid = Grid::default_sweep();
//! for spec in builtin_registry() {
//!     let report = verify(&spec, &grid, &VerifyOptions::default()).unwrap();
//!     assert!(report.min_margin > 0.0, "{} must hold", spec.name);
//! }
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod grid;
pub mod ineq;
pub mod means;
pub mod param;
pub mod stable;

pub use analysis::{find_root, sharp_constants, RootBracket, SharpConstant};
pub use error::{Error, Result};
pub use grid::{Grid, Spacing};
pub use ineq::{
    builtin_registry, sharpness_probe, verify, InequalitySpec, Kind, LinkKind, Status, Term,
    VerificationReport, VerifyOptions, Violation, Witness,
};
pub use means::{eval_expr, mean, MeanExpr, MeanKind, PositivePair, Power};
pub use param::{from_param, log_ratio, ratio, to_param, Param};

//! Declarative registry of mean inequalities, identities, and
//! incomparability claims, plus the sweep verifier that checks them with
//! positive margins over grids in the hyperbolic parameter x.
//!
//! Every claim is stored as a list of terms, each carrying the logarithm of
//! its value at scale G = 1 as a function of x.  Comparisons then reduce to
//! differences of these logarithms: the relative margin between adjacent
//! terms s > t is (s − t)/t = expm1(log s − log t), which stays meaningful
//! for margins as small as 1e-30 — far below what value-space subtraction
//! could resolve.

mod registry;
mod verify;

pub use registry::builtin_registry;
pub use verify::{sharpness_probe, verify, Status, VerificationReport, VerifyOptions, Violation};

use crate::means::PositivePair;

/// What a registry entry claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// terms[0] > terms[1] > … (links may individually be [`LinkKind::Equal`]).
    StrictChain,
    /// terms[0] = terms[1] up to a relative residual tolerance.
    Identity,
    /// Exactly two terms; each ordering occurs somewhere.
    Incomparable,
}

/// Relation between two adjacent chain terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkKind {
    /// Strictly greater; margin must be positive.
    Strict,
    /// Exactly equal; residual must stay within the identity tolerance.
    Equal,
}

/// A pinned regression point for an [`Kind::Incomparable`] entry: at `x`,
/// the first term is larger (`first_larger = true`) or smaller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub x: f64,
    pub first_larger: bool,
}

/// One side of a claim.
///
/// `log_fn` is log(value / G^degree) at scale G = 1 as a function of x — the
/// form all margins are computed in.  `direct` evaluates the same term from
/// the defining formulas at an explicit pair; it exists so tests can confirm
/// the two routes agree, and plays no part in verification.
pub struct Term {
    pub label: &'static str,
    /// Homogeneity degree: 0 for scalars, 1 for means, 2 for squared means.
    pub degree: u8,
    pub log_fn: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub direct: Box<dyn Fn(&PositivePair) -> f64 + Send + Sync>,
}

impl std::fmt::Debug for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Term")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .finish_non_exhaustive()
    }
}

/// A margin function substituted for the default log-difference of one
/// specific chain link, used where the two logarithms agree to so many
/// digits that their f64 difference would be pure cancellation noise.
pub type MarginOverride = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// One registered claim.
pub struct InequalitySpec {
    pub name: &'static str,
    pub kind: Kind,
    /// Human-readable statement of the claim, in A/G/L/I/S/Q notation.
    pub anchor: &'static str,
    /// For chains: strictly decreasing order.  For Incomparable: exactly 2.
    pub terms: Vec<Term>,
    /// Chain link relations; `terms.len() - 1` entries.  Empty otherwise.
    pub links: Vec<LinkKind>,
    /// x-interval on which the claim is asserted.
    pub domain: (f64, f64),
    /// Incomparable entries only.
    pub witnesses: Vec<Witness>,
    /// Per-link margin overrides (chains only); same length as `links`.
    pub margin_overrides: Vec<Option<MarginOverride>>,
}

impl std::fmt::Debug for InequalitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalitySpec")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("terms", &self.terms.len())
            .finish_non_exhaustive()
    }
}

impl InequalitySpec {
    /// Relative margin of chain link `i` at `x`: (T_i − T_{i+1})/T_{i+1},
    /// from the override when one is registered, otherwise from the
    /// log-difference of the adjacent terms.
    pub fn link_margin(&self, i: usize, x: f64) -> f64 {
        if let Some(Some(f)) = self.margin_overrides.get(i) {
            return f(x);
        }
        let hi = (self.terms[i].log_fn)(x);
        let lo = (self.terms[i + 1].log_fn)(x);
        (hi - lo).exp_m1()
    }

    /// Value of term `i` at `x` for the given scale: scale^degree · e^λ.
    pub fn term_value(&self, i: usize, x: f64, scale: f64) -> f64 {
        let t = &self.terms[i];
        scale.powi(t.degree as i32) * (t.log_fn)(x).exp()
    }
}

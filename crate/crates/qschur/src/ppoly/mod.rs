//! The ambient algebra: sparse polynomials over `F_q` whose exponents are
//! nonnegative rationals with `q`-power denominators.
//!
//! Allowing such exponents makes Frobenius `φ(a) = a^q` a bijection, so
//! `φ^k` is available for every integer `k`. Polynomials live either in the
//! ambient ring or in a "universal" ring of independent indeterminates used
//! for alternant quotients; the two never mix, and
//! [`Poly::evaluate_morphism`] is the only way across.

mod exponent;
mod monomial;
mod poly;
mod text;
mod unipoly;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use exponent::QExponent;
pub use monomial::Monomial;
pub use poly::Poly;
pub use text::{parse_poly, parse_poly_in, parse_var_name, var_name};
pub use unipoly::UniPoly;

/// Which family of variables a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSpace {
    /// Variables `x, y, z, ...` of the ambient algebra.
    Ambient,
    /// Independent indeterminates `X1, X2, ...` used for universal quotients.
    Universal,
}

/// Default cap on the number of terms in any intermediate result.
pub const DEFAULT_TERM_LIMIT: usize = 2_000_000;

static TERM_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TERM_LIMIT);

/// Current process-wide term limit.
pub fn term_limit() -> usize {
    TERM_LIMIT.load(Ordering::Relaxed)
}

/// Changes the process-wide term limit; computations that exceed it fail
/// with [`crate::Error::TermLimit`].
pub fn set_term_limit(limit: usize) {
    TERM_LIMIT.store(limit.max(1), Ordering::Relaxed);
}

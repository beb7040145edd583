//! Exact bivariate polynomial arithmetic over ℚ.
//!
//! [`BiPoly`] is a sparse polynomial in `x` and `y` with arbitrary-precision
//! rational coefficients; [`UniPoly`] is its dense univariate companion. The
//! crate supplies the primitives the plane-endomorphism code relies on:
//! substitution, gcd, exact division, resultants, squarefree decomposition and
//! complete factorization into irreducibles over ℚ.

mod factor;
mod gcd;
mod modp;
mod parse;
mod poly;
mod resultant;
mod uni;
mod zfactor;

pub use factor::{split_irreducible, squarefree_factors, Factorization, IrreducibleSplit};
pub use gcd::{constant_mod, div_rem, divides, exact_div, gcd, pseudo_rem_y};
pub use parse::{parse_poly, parse_rat, parse_uni, format_rat};
pub use poly::{BiPoly, Degree, Monomial};
pub use resultant::resultant_y;
pub use uni::UniPoly;
pub use zfactor::{factor_uni, UniFactors};

use thiserror::Error;

/// Base field element: an exact rational number in lowest terms.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial does not divide exactly")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

//! Exact coefficient arithmetic: arbitrary-precision rationals, Laurent
//! polynomials in `q` with exact rational exponents, reduced rational
//! functions, and the q-integer / q-factorial / q-binomial family.
//!
//! No floating point is used anywhere; equality of the canonical forms is
//! structural, so every cross-check in the library is an exact comparison.

mod qexp;
mod ratfun;

pub use qexp::{exact_div, is_palindromic, qbinom, qfact, qint, QExpPoly};
pub use ratfun::QRatFun;

/// Arbitrary-precision rational number, the coefficient field of every
/// character in the library. Kept reduced with a positive denominator by
/// `num_rational`.
pub type Rat = num_rational::BigRational;

/// Exact rational exponent of the formal variable `q`. Exponent denominators
/// stay tiny here (they divide `2m`), so a machine-word ratio suffices.
pub type Exp = num_rational::Ratio<i64>;

/// Integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Reduced fraction `n/d` as a [`Rat`].
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Integer as an [`Exp`].
pub fn exp_int(n: i64) -> Exp {
    Exp::from_integer(n)
}

/// Reduced fraction `n/d` as an [`Exp`].
pub fn exp_frac(n: i64, d: i64) -> Exp {
    Exp::new(n, d)
}

/// Parse a rational from `"a/b"` or `"a"` form.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    s.parse::<Rat>()
        .map_err(|e| crate::Error::Domain(format!("invalid rational {s:?}: {e}")))
}

/// Parse an exponent from `"a/b"` or `"a"` form.
pub fn parse_exp(s: &str) -> crate::Result<Exp> {
    s.parse::<Exp>()
        .map_err(|e| crate::Error::Domain(format!("invalid exponent {s:?}: {e}")))
}

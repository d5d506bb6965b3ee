//! Exact rational arithmetic and sparse symbolic polynomials.
//!
//! Everything downstream (continued fractions, lattice geometry, slope
//! arithmetic, intersection-form solves) is built on the types here; no
//! floating point appears anywhere in the crate.

mod sympoly;

pub use sympoly::{Monomial, SymPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer used for all lattice and index data.
pub type Int = BigInt;

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("missing symbol `{0}` in evaluation assignment")]
    MissingSymbol(String),
    #[error("cannot parse `{0}` as an integer")]
    BadInteger(String),
    #[error("cannot parse `{0}` as a rational number")]
    BadRational(String),
    #[error("cannot parse polynomial: {0}")]
    BadPolynomial(String),
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

pub fn parse_int(s: &str) -> Result<Int, ExactError> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| ExactError::BadInteger(s.to_string()))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let mk_err = || ExactError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((num, den)) => {
            let num = num.trim().parse::<Int>().map_err(|_| mk_err())?;
            let den = den.trim().parse::<Int>().map_err(|_| mk_err())?;
            if den.is_zero() {
                return Err(mk_err());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num = t.parse::<Int>().map_err(|_| mk_err())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the fraction `p/q` is a reduced weight in (0, 1).
pub fn is_proper_fraction(p: &Int, q: &Int) -> bool {
    p.is_positive() && p < q && num_integer::gcd(p.clone(), q.clone()).is_one()
}

//! Hirzebruch-Jung (minus-sign) continued fractions.
//!
//! A weight p/q in (0,1) expands uniquely as
//! `p/q = 1/(e₁ − 1/(e₂ − ... − 1/e_k))` with every digit ≥ 2. The digits
//! are the negated self-intersections of the resolution chain of an A_{p,q}
//! singularity, which is why every other module consumes them.

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{is_proper_fraction, Int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HjError {
    #[error("invalid fraction {p}/{q}: need 0 < p < q with gcd(p,q) = 1")]
    InvalidFraction { p: Int, q: Int },
    #[error("invalid digit {0}: every digit must be >= 2")]
    InvalidDigit(Int),
}

/// Digits e₁,...,e_k of a minus-sign continued fraction, each ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJExpansion {
    digits: Vec<Int>,
}

impl HJExpansion {
    pub fn new(digits: Vec<Int>) -> Result<Self, HjError> {
        if digits.is_empty() {
            return Err(HjError::InvalidDigit(Int::zero()));
        }
        let two = Int::from(2);
        if let Some(bad) = digits.iter().find(|d| **d < two) {
            return Err(HjError::InvalidDigit(bad.clone()));
        }
        Ok(HJExpansion { digits })
    }

    pub fn digits(&self) -> &[Int] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The paper-style nested fraction, e.g. `1/(2 - 1/2)`.
    pub fn nested_fraction_string(&self) -> String {
        fn nest(digits: &[Int]) -> String {
            match digits {
                [last] => last.to_string(),
                [first, rest @ ..] => format!("{} - 1/{}", first, wrap(rest)),
                [] => unreachable!("expansion digits are nonempty"),
            }
        }
        fn wrap(digits: &[Int]) -> String {
            if digits.len() == 1 {
                digits[0].to_string()
            } else {
                format!("({})", nest(digits))
            }
        }
        format!("1/{}", wrap(&self.digits))
    }
}

/// Expands p/q, 0 < p < q coprime, by the ceiling recurrence
/// eᵢ = ⌈q/p⌉, (p, q) ← (eᵢ·p − q, p).
pub fn hj_expand(p: &Int, q: &Int) -> Result<HJExpansion, HjError> {
    if !is_proper_fraction(p, q) {
        return Err(HjError::InvalidFraction {
            p: p.clone(),
            q: q.clone(),
        });
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut digits = Vec::new();
    while !p.is_zero() {
        let e = num_integer::Integer::div_ceil(&q, &p);
        let next_p = &e * &p - &q;
        q = std::mem::replace(&mut p, next_p);
        digits.push(e);
    }
    Ok(HJExpansion { digits })
}

/// Evaluates the nested fraction bottom-up, returning the reduced (p, q).
pub fn hj_evaluate(e: &HJExpansion) -> (Int, Int) {
    let mut value = Rational::zero();
    for d in e.digits.iter().rev() {
        let denom = Rational::from_integer(d.clone()) - value;
        value = denom.recip();
    }
    (value.numer().clone(), value.denom().clone())
}

//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Symbols are plain names (`a`, `b`, `pi`, `eps2`, `a1`, ...); `pi` and
//! `eps2` are atomic symbols, never evaluated numerically. The degrees that
//! occur in practice are tiny, so a sorted-map representation is enough.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_rational, ExactError, Rational};

/// A monomial: a multiset of symbol names, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<String>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn symbol(name: &str) -> Self {
        Monomial(vec![name.to_string()])
    }

    pub fn from_symbols<I: IntoIterator<Item = String>>(symbols: I) -> Self {
        let mut v: Vec<String> = symbols.into_iter().collect();
        v.sort();
        Monomial(v)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        v.sort();
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Symbols are printed in descending name order, which reproduces the
        // paper-style `pi*b` and `eps2*a1` spellings.
        let mut first = true;
        for s in self.0.iter().rev() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// Sparse polynomial: canonical map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn symbol(name: &str) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(Monomial::symbol(name), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// All symbol names occurring in the polynomial.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.symbols().iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        let mut out = SymPoly::zero();
        for (m, coeff) in &self.terms {
            out.terms.insert(m.clone(), coeff * c);
        }
        out
    }

    /// Exact substitution of every symbol by a rational value.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, ExactError> {
        let mut total = Rational::zero();
        for (m, coeff) in &self.terms {
            let mut value = coeff.clone();
            for s in m.symbols() {
                let v = assignment
                    .get(s)
                    .ok_or_else(|| ExactError::MissingSymbol(s.clone()))?;
                value *= v;
            }
            total += value;
        }
        Ok(total)
    }

    /// Splits the polynomial into (monomial, coefficient) pairs; used by the
    /// intersection-form solver to solve one rational system per monomial.
    pub fn monomial_decomposition(&self) -> Vec<(Monomial, Rational)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Rebuilds a polynomial from monomial/coefficient pairs.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> SymPoly {
        let mut p = SymPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Parses the canonical text rendering, e.g. `3*a + 1/3*pi*b - eps2*a1`.
    pub fn parse(text: &str) -> Result<SymPoly, ExactError> {
        let src = text.trim();
        if src.is_empty() {
            return Err(ExactError::BadPolynomial("empty input".to_string()));
        }
        let mut out = SymPoly::zero();
        for (sign, term) in split_terms(src)? {
            if term.is_empty() {
                return Err(ExactError::BadPolynomial(format!("empty term in `{src}`")));
            }
            let mut coeff = if sign { -Rational::one() } else { Rational::one() };
            let mut symbols = Vec::new();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(ExactError::BadPolynomial(format!(
                        "empty factor in `{term}`"
                    )));
                }
                if factor.chars().next().unwrap().is_ascii_digit() {
                    coeff *= super::parse_rational(factor)?;
                } else if factor
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
                {
                    symbols.push(factor.to_string());
                } else {
                    return Err(ExactError::BadPolynomial(format!("bad factor `{factor}`")));
                }
            }
            out.add_term(Monomial::from_symbols(symbols), coeff);
        }
        Ok(out)
    }
}

/// Splits `a + b - c` into signed terms, honoring a leading sign.
fn split_terms(src: &str) -> Result<Vec<(bool, String)>, ExactError> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut seen_content = false;
    for ch in src.chars() {
        match ch {
            '+' | '-' if !seen_content && current.trim().is_empty() => {
                // Sign prefix of the upcoming term.
                if ch == '-' {
                    negative = !negative;
                }
            }
            '+' | '-' => {
                terms.push((negative, current.trim().to_string()));
                current.clear();
                negative = ch == '-';
                seen_content = false;
            }
            c if c.is_whitespace() => current.push(c),
            c => {
                current.push(c);
                seen_content = true;
            }
        }
    }
    if !current.trim().is_empty() {
        terms.push((negative, current.trim().to_string()));
    } else if terms.is_empty() {
        return Err(ExactError::BadPolynomial(src.to_string()));
    }
    Ok(terms)
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{}", format_rational(c))?;
            } else {
                write!(f, "{}*{}", format_rational(c), m)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                out.add_term(ml.product(mr), cl * cr);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for SymPoly {
            type Output = SymPoly;
            fn $method(self, rhs: SymPoly) -> SymPoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        -&self
    }
}

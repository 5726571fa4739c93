//! Exact rational scalars and the external literal format.
//!
//! A literal is a decimal integer, optionally followed by `/` and a positive
//! decimal integer: `7`, `-3/2`, `0/5`. No whitespace, no leading `+`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

/// A coordinate vector over the rationals.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}: {}", self.literal, self.reason)
    }
}

impl std::error::Error for ParseRationalError {}

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a rational literal in the strict external format.
pub fn parse_rational(literal: &str) -> Result<Scalar, ParseRationalError> {
    let err = |reason| ParseRationalError {
        literal: literal.to_owned(),
        reason,
    };
    let (numer, denom) = match literal.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (literal, None),
    };
    let (negative, digits) = match numer.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, numer),
    };
    let mut n = parse_digits(digits).ok_or_else(|| err("numerator is not a decimal integer"))?;
    if negative {
        n = -n;
    }
    let d = match denom {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_digits(d).ok_or_else(|| err("denominator is not a decimal integer"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            d
        }
    };
    Ok(Scalar::new(n, d))
}

/// Formats a scalar as a literal accepted by [`parse_rational`].
pub fn format_rational(value: &Scalar) -> String {
    // `Ratio` already prints `n` or `n/d` in lowest terms with `d > 0`.
    value.to_string()
}

/// Formats a vector as a bracketed, comma separated list of literals.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(","))
}

pub(crate) fn is_neg(value: &Scalar) -> bool {
    value.is_negative()
}

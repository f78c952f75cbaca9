use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ParseScalarError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Encodes as `p/q`, or just `p` when `q = 1`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses the `p/q` (or `p`) encoding. Decimal points, exponents and zero
/// denominators are rejected; the sign may only appear on the numerator.
pub fn parse_rational(literal: &str) -> Result<Rational, ParseScalarError> {
    let fail = |reason| ParseScalarError {
        literal: literal.to_string(),
        reason,
    };
    let text = literal.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer = parse_integer(numer, true).ok_or_else(|| fail("malformed numerator"))?;
    let denom = match denom {
        Some(d) => parse_integer(d, false).ok_or_else(|| fail("malformed denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(fail("zero denominator"));
    }
    debug_assert!(denom.is_positive());
    Ok(Rational::new(numer, denom))
}

fn parse_integer(text: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix(['-', '+']) {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

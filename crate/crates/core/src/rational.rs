//! Arbitrary-precision rationals in the `"p/q"` wire format.
//!
//! Backed by [`num_rational::BigRational`], which keeps values in lowest
//! terms with a positive denominator, so equality and hashing behave and
//! serialized output is canonical.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` (or a bare integer `"p"`) into a canonical rational.
pub fn parse_rational(text: &str) -> Result<Rat, RationalParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| RationalParseError::BadInteger(trimmed.to_string()))?;
    let den: BigInt = den_text
        .parse()
        .map_err(|_| RationalParseError::BadInteger(trimmed.to_string()))?;
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(trimmed.to_string()));
    }
    Ok(Rat::new(num, den))
}

/// Formats a rational as `"p/q"` with positive denominator.
pub fn format_rational(value: &Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Rational-to-f64 conversion that survives numerators/denominators outside
/// the f64 range by dividing the two halves separately.
pub fn rat_to_f64(value: &Rat) -> f64 {
    if let Some(v) = value.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let num = value.numer().to_f64().unwrap_or(f64::INFINITY * sign_of(value));
    let den = value.denom().to_f64().unwrap_or(f64::INFINITY);
    num / den
}

fn sign_of(value: &Rat) -> f64 {
    if value.is_negative() {
        -1.0
    } else {
        1.0
    }
}

/// Integer vector as canonical primitive representative: entries divided by
/// their gcd, first nonzero entry positive. Returns `None` for the zero
/// vector.
pub fn primitive_integer_vector(entries: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut gcd = BigInt::zero();
    for e in entries {
        gcd = num_integer_gcd(&gcd, e);
    }
    if gcd.is_zero() {
        return None;
    }
    let mut out: Vec<BigInt> = entries.iter().map(|e| e / &gcd).collect();
    if let Some(first) = out.iter().find(|e| !e.is_zero()) {
        if first.is_negative() {
            for e in out.iter_mut() {
                *e = -(e.clone());
            }
        }
    }
    Some(out)
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for text in ["3/2", "-2/1", "0/1", "7/1"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_rational("4/6").unwrap(), parse_rational("2/3").unwrap());
        assert_eq!(parse_rational("1/-2").unwrap(), parse_rational("-1/2").unwrap());
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
        assert_eq!(parse_rational("5").unwrap(), parse_rational("5/1").unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn primitive_vector_canonical_sign() {
        let v: Vec<BigInt> = [-2, 2, 0].iter().map(|&x| BigInt::from(x)).collect();
        let p = primitive_integer_vector(&v).unwrap();
        let expect: Vec<BigInt> = [1, -1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p, expect);
        assert!(primitive_integer_vector(&[BigInt::zero()]).is_none());
    }
}

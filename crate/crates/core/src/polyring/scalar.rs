//! Exact rational scalars.
//!
//! `Scalar` is a lowest-terms big rational with a positive denominator; the
//! canonical text form is `num/den` (always with the slash) and the parser
//! also accepts a bare integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `num/den` encoding used by every serialized artifact.
pub fn to_canonical(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Human form: `3`, `-1/2`.
pub fn to_display(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Lenient parse: accepts `a`, `-a`, `a/b` with `b != 0`, reducing to lowest
/// terms.
pub fn parse_scalar(text: &str) -> Result<Scalar, PolyError> {
    let bad = || PolyError::BadScalar(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Strict parse of the canonical encoding: `num/den`, lowest terms, `den > 0`.
pub fn parse_canonical(text: &str) -> Result<Scalar, PolyError> {
    let bad = || PolyError::BadScalar(text.to_string());
    let (n, d) = text.split_once('/').ok_or_else(bad)?;
    if n.starts_with('+') || d.starts_with(['+', '-']) {
        return Err(bad());
    }
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(bad());
    }
    let value = BigRational::new_raw(num.clone(), den.clone());
    let reduced = BigRational::new(num, den);
    if value.numer() != reduced.numer() || value.denom() != reduced.denom() {
        return Err(bad());
    }
    // Reject non-canonical digit strings such as "01/1" or "-0/1".
    if to_canonical(&reduced) != text {
        return Err(bad());
    }
    Ok(reduced)
}

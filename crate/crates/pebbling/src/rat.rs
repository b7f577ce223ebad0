//! Exact rational arithmetic. Every quantity in the mathematical core is a
//! `Rat`; no floating point enters any decision.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// 2^(-d)
pub fn pow2_neg(d: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << d)
}

/// base^(-d) for an arbitrary positive integer base.
pub fn pow_neg(base: u32, d: u32) -> Rat {
    assert!(base >= 1);
    Rat::new(BigInt::one(), BigInt::from(base).pow(d))
}

/// Parses "p/q" or a plain integer "p".
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError::Empty);
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rat::from_integer)
            .map_err(|_| RatParseError::Invalid(s.to_string())),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| RatParseError::Invalid(s.to_string()))?;
            let q = BigInt::from_str(q.trim()).map_err(|_| RatParseError::Invalid(s.to_string()))?;
            if q.is_zero() {
                return Err(RatParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Formats as "p/q", always including the denominator.
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Convenience decimal approximation; display only, never used in checks.
pub fn approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// True iff the denominator is a power of two.
pub fn is_dyadic(r: &Rat) -> bool {
    let mut d = r.denom().abs();
    let two = BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    d.is_one()
}

use num::Integer as _;

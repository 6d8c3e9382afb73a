//! Exact rational scalars.
//!
//! [`Rat`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator after every operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::ParseError;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub fn pow_signed(base: &Rat, exp: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Parses `n`, `-n`, `p/q` or `-p/q` with decimal integers and `q > 0`.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let s = text.trim();
    let offset = text.len() - text.trim_start().len();
    let err = |pos: usize, msg: &str| ParseError {
        pos: offset + pos,
        message: msg.to_string(),
    };
    if s.is_empty() {
        return Err(err(0, "empty rational literal"));
    }
    let (num_text, den_text) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num_text).ok_or_else(|| err(0, "invalid integer"))?;
    let denom = match den_text {
        None => BigInt::one(),
        Some(d) => {
            let pos = num_text.len() + 1;
            if d.starts_with(['-', '+']) {
                return Err(err(pos, "denominator must be a positive integer"));
            }
            let d = parse_int(d).ok_or_else(|| err(pos, "invalid integer"))?;
            if !d.is_positive() {
                return Err(err(pos, "denominator must be a positive integer"));
            }
            d
        }
    };
    Ok(Rat::new(numer, denom))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text: `n` or `p/q`, sign on the numerator.
pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

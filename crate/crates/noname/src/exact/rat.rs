//! Arbitrary-precision rationals.
//!
//! Backed by `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator, exactly the canonical form the rest of the
//! crate relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` in canonical form. Panics if `d` is zero; use
/// [`parse_rat`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"` with optional sign, exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Usage(format!("bad rational literal {s:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Usage(format!("bad rational literal {s:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: `"n"` when the denominator is 1, `"n/d"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Absolute value, used by height bounds in the irreducibility search.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

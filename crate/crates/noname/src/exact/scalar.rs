//! The coefficient domain shared by every construction in the crate: an
//! exact value from the base field, which is either Q or a prime field F_p.
//!
//! The base is a runtime tag because problem descriptions choose it at
//! parse time. Mixing scalars from different bases is a programming error
//! and panics; public entry points validate bases before arithmetic runs.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::fp::{is_prime, Fp};
use crate::exact::rat::{format_rat, Rat};

/// Which base field values live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Rational,
    Prime(u64),
}

impl Base {
    /// Checked constructor for a prime base.
    pub fn prime(p: u64) -> Result<Base> {
        if is_prime(p) {
            Ok(Base::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Validates the invariants a tag must satisfy (primality of p).
    pub fn validate(&self) -> Result<()> {
        match self {
            Base::Rational => Ok(()),
            Base::Prime(p) if is_prime(*p) => Ok(()),
            Base::Prime(p) => Err(Error::NotPrime(*p)),
        }
    }
}

impl std::fmt::Display for Base {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Base::Rational => write!(f, "Q"),
            Base::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact base-field value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(Rat),
    Fp(Fp),
}

impl Scalar {
    pub fn zero(base: Base) -> Scalar {
        match base {
            Base::Rational => Scalar::Rat(Rat::zero()),
            Base::Prime(p) => Scalar::Fp(Fp::zero(p)),
        }
    }

    pub fn one(base: Base) -> Scalar {
        match base {
            Base::Rational => Scalar::Rat(Rat::one()),
            Base::Prime(p) => Scalar::Fp(Fp::one(p)),
        }
    }

    pub fn from_i64(n: i64, base: Base) -> Scalar {
        match base {
            Base::Rational => Scalar::Rat(Rat::from_integer(n.into())),
            Base::Prime(p) => Scalar::Fp(Fp::new(n, p)),
        }
    }

    /// Coerces an exact rational into the base: identity over Q, residue
    /// reduction over F_p (integers only).
    pub fn from_rat(r: &Rat, base: Base) -> Result<Scalar> {
        match base {
            Base::Rational => Ok(Scalar::Rat(r.clone())),
            Base::Prime(p) => {
                use num_traits::ToPrimitive;
                if !r.denom().to_i64().is_some_and(|d| d == 1) {
                    return Err(Error::BaseMismatch(format!(
                        "{r} is not an integer residue for F_{p}"
                    )));
                }
                let p_big = num_bigint::BigInt::from(p);
                let reduced = ((r.numer() % &p_big) + &p_big) % &p_big;
                let v = reduced.to_u64().expect("residue fits u64");
                Ok(Scalar::Fp(Fp::from_residue(v, p)))
            }
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Scalar::Rat(_) => Base::Rational,
            Scalar::Fp(x) => Base::Prime(x.modulus()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(x) => *x == Fp::one(x.modulus()),
        }
    }

    fn pair<'a>(&'a self, other: &'a Scalar) -> (&'a Scalar, &'a Scalar) {
        assert_eq!(
            self.base(),
            other.base(),
            "scalar base mismatch: {} vs {}",
            self.base(),
            other.base()
        );
        (self, other)
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match self.pair(other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.add(b)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match self.pair(other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.sub(b)),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match self.pair(other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.mul(b)),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self.pair(other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.div(b)?),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one(self.base()).div(self)
    }

    /// True for rationals with a nonnegative sign; used only by the
    /// renderer to decide between `+` and `-` separators.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", format_rat(r)),
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn base_validation() {
        assert!(Base::prime(7).is_ok());
        assert!(matches!(Base::prime(6), Err(Error::NotPrime(6))));
        assert!(Base::Rational.validate().is_ok());
    }

    #[test]
    fn arithmetic_dispatch() {
        let a = Scalar::Rat(rat(1, 2));
        let b = Scalar::Rat(rat(1, 3));
        assert_eq!(a.add(&b), Scalar::Rat(rat(5, 6)));
        assert!(a.div(&Scalar::zero(Base::Rational)).is_err());

        let p = Base::Prime(5);
        let x = Scalar::from_i64(3, p);
        let y = Scalar::from_i64(4, p);
        assert_eq!(x.mul(&y), Scalar::from_i64(2, p));
        assert_eq!(x.div(&y).unwrap().mul(&y), x);
    }

    #[test]
    #[should_panic(expected = "scalar base mismatch")]
    fn mixed_bases_panic() {
        let a = Scalar::from_i64(1, Base::Rational);
        let b = Scalar::from_i64(1, Base::Prime(5));
        let _ = a.add(&b);
    }
}

//! Prime-field elements with a small modulus.
//!
//! Every value carries its modulus, so elements of different prime fields
//! can coexist inside one computation and mismatches are caught at the
//! point of use.

use crate::error::{Error, Result};

/// Deterministic trial division; moduli here are desk-scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, stored as the canonical residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    /// Reduces an arbitrary signed integer into F_p.
    pub fn new(value: i64, modulus: u64) -> Self {
        debug_assert!(modulus >= 2);
        let m = modulus as i128;
        let r = ((value as i128 % m) + m) % m;
        Fp { residue: r as u64, modulus }
    }

    pub fn from_residue(residue: u64, modulus: u64) -> Self {
        Fp { residue: residue % modulus, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Fp { residue: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        Fp { residue: 1 % modulus, modulus }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "prime field modulus mismatch: {} vs {}",
            self.modulus, other.modulus
        );
    }

    pub fn add(&self, other: &Fp) -> Fp {
        self.check(other);
        let r = (self.residue as u128 + other.residue as u128) % self.modulus as u128;
        Fp { residue: r as u64, modulus: self.modulus }
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        self.check(other);
        let m = self.modulus as u128;
        let r = (self.residue as u128 + m - other.residue as u128) % m;
        Fp { residue: r as u64, modulus: self.modulus }
    }

    pub fn mul(&self, other: &Fp) -> Fp {
        self.check(other);
        let r = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        Fp { residue: r as u64, modulus: self.modulus }
    }

    pub fn neg(&self) -> Fp {
        if self.residue == 0 {
            *self
        } else {
            Fp { residue: self.modulus - self.residue, modulus: self.modulus }
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Fp> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        let m = self.modulus as i128;
        let inv = ((s0 % m) + m) % m;
        Ok(Fp { residue: inv as u64, modulus: self.modulus })
    }

    pub fn div(&self, other: &Fp) -> Result<Fp> {
        self.check(other);
        Ok(self.mul(&other.inv()?))
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn field_axioms_small() {
        for p in [2u64, 3, 5, 13] {
            for a in 0..p {
                let x = Fp::from_residue(a, p);
                assert_eq!(x.add(&x.neg()).residue(), 0);
                if a != 0 {
                    let inv = x.inv().unwrap();
                    assert_eq!(x.mul(&inv), Fp::one(p));
                }
            }
        }
        assert!(Fp::zero(5).inv().is_err());
    }

    #[test]
    fn negative_values_reduce() {
        assert_eq!(Fp::new(-1, 5).residue(), 4);
        assert_eq!(Fp::new(-10, 5).residue(), 0);
        assert_eq!(Fp::new(12, 5).residue(), 2);
    }
}

//! Dense univariate polynomials over the base field.
//!
//! Coefficients are stored lowest degree first. The representation is
//! canonical: the coefficient vector is empty for the zero polynomial and
//! never has a trailing zero otherwise.

use crate::error::{Error, Result};
use crate::exact::scalar::{Base, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    base: Base,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(base: Base) -> Self {
        UniPoly { base, coeffs: Vec::new() }
    }

    pub fn one(base: Base) -> Self {
        UniPoly::constant(Scalar::one(base))
    }

    pub fn constant(c: Scalar) -> Self {
        let base = c.base();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        UniPoly { base, coeffs }
    }

    /// The indeterminate t.
    pub fn x(base: Base) -> Self {
        UniPoly { base, coeffs: vec![Scalar::zero(base), Scalar::one(base)] }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing
    /// zeros. Errors if any coefficient lives in a different base.
    pub fn from_coeffs(base: Base, mut coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            if c.base() != base {
                return Err(Error::BaseMismatch(format!(
                    "coefficient in {} inside a polynomial over {}",
                    c.base(),
                    base
                )));
            }
        }
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Ok(UniPoly { base, coeffs })
    }

    /// Convenience for integer coefficient lists, ascending.
    pub fn from_i64(base: Base, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&n| Scalar::from_i64(n, base)).collect();
        UniPoly::from_coeffs(base, coeffs).expect("single-base coefficients")
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    /// Coefficient of t^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Scalar::zero(self.base))
    }

    fn trim(mut coeffs: Vec<Scalar>, base: Base) -> UniPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { base, coeffs }
    }

    fn check_base(&self, other: &UniPoly) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!(
                "polynomials over {} and {}",
                self.base, other.base
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        Ok(UniPoly::trim(coeffs, self.base))
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect();
        Ok(UniPoly::trim(coeffs, self.base))
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { base: self.base, coeffs: self.coeffs.iter().map(Scalar::neg).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(self.base));
        }
        let mut coeffs = vec![Scalar::zero(self.base); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(UniPoly::trim(coeffs, self.base))
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.base);
        }
        UniPoly { base: self.base, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Euclidean division: returns `(q, r)` with `self = other*q + r` and
    /// `deg r < deg other`.
    pub fn divmod(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check_base(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = other.degree().unwrap();
        let lead_inv = other.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(self.base); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let k = rem.len() - 1;
            let c = rem[k].mul(&lead_inv);
            if !c.is_zero() {
                quot[k - db] = c.clone();
                for (j, b) in other.coeffs.iter().enumerate() {
                    rem[k - db + j] = rem[k - db + j].sub(&c.mul(b));
                }
            }
            debug_assert!(rem[k].is_zero());
            rem.pop();
        }
        Ok((UniPoly::trim(quot, self.base), UniPoly::trim(rem, self.base)))
    }

    /// Remainder of division by a monic polynomial, without forming the
    /// quotient. Hot path for reduction modulo the field modulus.
    pub fn rem_monic(&self, modulus: &UniPoly) -> UniPoly {
        debug_assert!(modulus.is_monic());
        let d = modulus.degree().unwrap();
        if self.coeffs.len() <= d {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if !c.is_zero() {
                for (j, b) in modulus.coeffs.iter().take(d).enumerate() {
                    rem[k - d + j] = rem[k - d + j].sub(&c.mul(b));
                }
            }
            rem.pop();
        }
        UniPoly::trim(rem, self.base)
    }

    /// Divides all coefficients by the leading one. Zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`,
    /// `g` monic and equal to gcd(self, other).
    pub fn xgcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        self.check_base(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::Usage("gcd of two zero polynomials".into()));
        }
        let base = self.base;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (UniPoly::one(base), UniPoly::zero(base));
        let (mut v0, mut v1) = (UniPoly::zero(base), UniPoly::one(base));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let u = u0.sub(&q.mul(&u1)?)?;
            let v = v0.sub(&q.mul(&v1)?)?;
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        let lead_inv = r0.leading().unwrap().inv()?;
        Ok((r0.scale(&lead_inv), u0.scale(&lead_inv), v0.scale(&lead_inv)))
    }

    /// Horner evaluation at a base-field point.
    pub fn eval(&self, point: &Scalar) -> Result<Scalar> {
        if point.base() != self.base {
            return Err(Error::BaseMismatch(format!(
                "evaluating a polynomial over {} at a point in {}",
                self.base,
                point.base()
            )));
        }
        let mut acc = Scalar::zero(self.base);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(point).add(c);
        }
        Ok(acc)
    }
}

/// Renders ascending-power coefficients as `c0+c1*var+c2*var^2+...`,
/// omitting zero terms and unit coefficients. Deterministic; shared by
/// polynomial and field-element display.
pub fn scalar_poly_string(coeffs: &[Scalar], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = match k {
            0 => c.to_string(),
            _ => {
                let var_pow = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                if c.is_one() {
                    var_pow
                } else if c.is_negative() && c.neg().is_one() {
                    // rationals only; prime residues stay canonical
                    format!("-{var_pow}")
                } else {
                    format!("{c}*{var_pow}")
                }
            }
        };
        if !out.is_empty() && !body.starts_with('-') {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", scalar_poly_string(&self.coeffs, "t"))
    }
}

//! The extension field K = Base[t]/(m(t)) and its elements.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use crate::exact::scalar::{Base, Scalar};
use crate::exact::UniPoly;

/// How the irreducibility of the modulus was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityStatus {
    /// Ruled out every possible factor within the bounded search.
    Verified,
    /// The bounded search was inconclusive and the caller vouched for the
    /// modulus via `trust_irreducible`.
    Asserted,
}

/// Candidate budget for the factor searches; beyond this the check is
/// inconclusive rather than slow.
const FACTOR_SEARCH_BUDGET: u64 = 2_000_000;

/// Descriptor of the extension K = Base[t]/(m(t)).
///
/// Shared by reference (`Arc`) among all elements of the field and never
/// mutated after construction.
#[derive(Debug)]
pub struct FieldDescriptor {
    base: Base,
    modulus: UniPoly,
    degree: usize,
    generator_name: String,
    irreducibility: IrreducibilityStatus,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.modulus == other.modulus
    }
}
impl Eq for FieldDescriptor {}

impl FieldDescriptor {
    /// Builds a field from a monic modulus, verifying irreducibility by
    /// the bounded factor search. With `trust_irreducible`, an
    /// inconclusive search records the modulus as asserted instead of
    /// failing.
    pub fn new(
        base: Base,
        modulus: UniPoly,
        generator_name: &str,
        trust_irreducible: bool,
    ) -> Result<Arc<Self>> {
        base.validate()?;
        if modulus.base() != base {
            return Err(Error::BaseMismatch(format!(
                "modulus over {} for a field over {}",
                modulus.base(),
                base
            )));
        }
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::Usage("modulus must have degree >= 1".into())),
        };
        if !modulus.is_monic() {
            return Err(Error::Usage("modulus must be monic".into()));
        }
        let irreducibility = check_irreducible(&modulus, trust_irreducible)?;
        Ok(Arc::new(FieldDescriptor {
            base,
            modulus,
            degree,
            generator_name: generator_name.to_string(),
            irreducibility,
        }))
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_name(&self) -> &str {
        &self.generator_name
    }

    pub fn irreducibility(&self) -> IrreducibilityStatus {
        self.irreducibility
    }

    /// Same mathematical field: pointer equality short-circuits, structural
    /// equality covers descriptors built twice from the same data.
    pub fn same(a: &Arc<FieldDescriptor>, b: &Arc<FieldDescriptor>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// An element of K, as coordinates over the power basis 1, t, ..., t^(d-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    desc: Arc<FieldDescriptor>,
    coeffs: Vec<Scalar>,
}

impl FieldElement {
    fn from_reduced(desc: Arc<FieldDescriptor>, poly: &UniPoly) -> FieldElement {
        let d = desc.degree;
        debug_assert!(poly.degree().is_none_or(|pd| pd < d));
        let mut coeffs = poly.coeffs().to_vec();
        coeffs.resize(d, Scalar::zero(desc.base));
        FieldElement { desc, coeffs }
    }

    /// Reduces an arbitrary polynomial into the field.
    pub fn from_poly(desc: &Arc<FieldDescriptor>, poly: &UniPoly) -> Result<FieldElement> {
        if poly.base() != desc.base {
            return Err(Error::BaseMismatch(format!(
                "polynomial over {} in a field over {}",
                poly.base(),
                desc.base
            )));
        }
        Ok(FieldElement::from_reduced(desc.clone(), &poly.rem_monic(&desc.modulus)))
    }

    /// Builds an element from exactly `d` power-basis coordinates.
    pub fn from_coords(desc: &Arc<FieldDescriptor>, coords: Vec<Scalar>) -> Result<FieldElement> {
        if coords.len() != desc.degree {
            return Err(Error::Usage(format!(
                "expected {} coordinates, got {}",
                desc.degree,
                coords.len()
            )));
        }
        for c in &coords {
            if c.base() != desc.base {
                return Err(Error::BaseMismatch(format!(
                    "coordinate in {} for a field over {}",
                    c.base(),
                    desc.base
                )));
            }
        }
        Ok(FieldElement { desc: desc.clone(), coeffs: coords })
    }

    pub fn from_i64_coords(desc: &Arc<FieldDescriptor>, ints: &[i64]) -> Result<FieldElement> {
        let coords = ints.iter().map(|&n| Scalar::from_i64(n, desc.base)).collect();
        FieldElement::from_coords(desc, coords)
    }

    pub fn zero(desc: &Arc<FieldDescriptor>) -> FieldElement {
        FieldElement {
            desc: desc.clone(),
            coeffs: vec![Scalar::zero(desc.base); desc.degree],
        }
    }

    pub fn one(desc: &Arc<FieldDescriptor>) -> FieldElement {
        FieldElement::from_scalar(desc, Scalar::one(desc.base))
    }

    /// The class of t.
    pub fn generator(desc: &Arc<FieldDescriptor>) -> FieldElement {
        FieldElement::from_poly(desc, &UniPoly::x(desc.base)).expect("generator")
    }

    pub fn from_scalar(desc: &Arc<FieldDescriptor>, c: Scalar) -> FieldElement {
        assert_eq!(c.base(), desc.base, "scalar base mismatch");
        let mut coeffs = vec![Scalar::zero(desc.base); desc.degree];
        coeffs[0] = c;
        FieldElement { desc: desc.clone(), coeffs }
    }

    pub fn from_int(desc: &Arc<FieldDescriptor>, n: i64) -> FieldElement {
        FieldElement::from_scalar(desc, Scalar::from_i64(n, desc.base))
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    /// Power-basis coordinates, always exactly `d` of them.
    pub fn coords(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// The element as a polynomial of degree < d.
    pub fn as_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.desc.base, self.coeffs.clone()).expect("canonical coords")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    fn check_same(&self, other: &FieldElement) {
        assert!(
            FieldDescriptor::same(&self.desc, &other.desc),
            "field descriptor mismatch"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        FieldElement { desc: self.desc.clone(), coeffs }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        FieldElement { desc: self.desc.clone(), coeffs }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            desc: self.desc.clone(),
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let product = self
            .as_poly()
            .mul(&other.as_poly())
            .expect("same base")
            .rem_monic(&self.desc.modulus);
        FieldElement::from_reduced(self.desc.clone(), &product)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> FieldElement {
        assert_eq!(c.base(), self.desc.base, "scalar base mismatch");
        FieldElement {
            desc: self.desc.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse via extended Euclid against the modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, u, _) = self.as_poly().xgcd(&self.desc.modulus)?;
        if g.degree() != Some(0) {
            // only possible when the modulus is reducible
            return Err(Error::Internal(format!(
                "element shares the factor {g} with the modulus; the modulus is not irreducible"
            )));
        }
        FieldElement::from_poly(&self.desc, &u)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other);
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::one(&self.desc);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}",
            crate::exact::poly::scalar_poly_string(&self.coeffs, self.desc.generator_name())
        )
    }
}

// ---------------------------------------------------------------------------
// Irreducibility: bounded trial-factor search
// ---------------------------------------------------------------------------

fn check_irreducible(m: &UniPoly, trust: bool) -> Result<IrreducibilityStatus> {
    let d = m.degree().expect("nonzero modulus");
    if d == 1 {
        return Ok(IrreducibilityStatus::Verified);
    }
    match m.base() {
        Base::Prime(p) => prime_base_search(m, d, p, trust),
        Base::Rational => rational_base_search(m, d, trust),
    }
}

/// Exhaustive enumeration of monic divisor candidates over F_p, degree
/// up to d/2, subject to the candidate budget.
fn prime_base_search(m: &UniPoly, d: usize, p: u64, trust: bool) -> Result<IrreducibilityStatus> {
    let base = m.base();
    let mut budget = FACTOR_SEARCH_BUDGET;
    for k in 1..=d / 2 {
        let count = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if count > budget as u128 {
            return inconclusive(trust);
        }
        budget -= count as u64;
        let mut digits = vec![0u64; k];
        loop {
            let mut coeffs: Vec<Scalar> = digits
                .iter()
                .map(|&r| Scalar::Fp(crate::exact::Fp::from_residue(r, p)))
                .collect();
            coeffs.push(Scalar::one(base));
            let cand = UniPoly::from_coeffs(base, coeffs)?;
            let (_, rem) = m.divmod(&cand)?;
            if rem.is_zero() {
                return Err(Error::ReducibleModulus { factor: cand.to_string() });
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Ok(IrreducibilityStatus::Verified)
}

fn inconclusive(trust: bool) -> Result<IrreducibilityStatus> {
    if trust {
        Ok(IrreducibilityStatus::Asserted)
    } else {
        Err(Error::IrreducibilityUnverified)
    }
}

/// Root search (conclusive through degree 3) plus, for monic integer
/// moduli, a bounded search over monic integer factors of degree <= d/2.
fn rational_base_search(m: &UniPoly, d: usize, trust: bool) -> Result<IrreducibilityStatus> {
    // clear denominators: f = lcm * m has integer coefficients
    let rats: Vec<Rat> = m
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => r.clone(),
            Scalar::Fp(_) => unreachable!("rational base"),
        })
        .collect();
    let mut lcm = BigInt::one();
    for r in &rats {
        lcm = num_integer::lcm(lcm, r.denom().clone());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * Rat::from_integer(lcm.clone())).to_integer()).collect();

    // rational roots n/q with n | constant, q | leading
    if ints[0].is_zero() {
        return Err(Error::ReducibleModulus { factor: "t".into() });
    }
    let num_divs = small_divisors(&ints[0]);
    let den_divs = small_divisors(ints.last().unwrap());
    if let (Some(nums), Some(dens)) = (&num_divs, &den_divs) {
        for n in nums {
            for q in dens {
                for sign in [1i64, -1] {
                    let root = Rat::new(BigInt::from(sign) * n, q.clone());
                    if m.eval(&Scalar::Rat(root.clone()))?.is_zero() {
                        return Err(Error::ReducibleModulus {
                            factor: format!("t - ({})", crate::exact::format_rat(&root)),
                        });
                    }
                }
            }
        }
    }
    if d <= 3 {
        return match (num_divs, den_divs) {
            (Some(_), Some(_)) => Ok(IrreducibilityStatus::Verified),
            _ => inconclusive(trust),
        };
    }

    // degree >= 4: monic integer factors (Gauss) when the modulus itself
    // has integer coefficients
    let monic_integer = m.is_monic() && rats.iter().all(|r| r.denom().is_one());
    if !monic_integer {
        return inconclusive(trust);
    }
    let norm_sq: BigInt = ints.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1i32;
    let mut budget = FACTOR_SEARCH_BUDGET;
    for k in 2..=d / 2 {
        // Mignotte-style height bound for a degree-k monic factor
        let bound = binom(k, k / 2) * norm.clone() + 1i32;
        let Some(b) = bound.to_i64() else {
            return inconclusive(trust);
        };
        let width = 2u128 * b as u128 + 1;
        let count = width.checked_pow(k as u32).unwrap_or(u128::MAX);
        if count > budget as u128 {
            return inconclusive(trust);
        }
        budget -= count as u64;
        let mut digits = vec![-b; k];
        loop {
            let mut coeffs: Vec<Scalar> = digits.iter().map(|&n| Scalar::from_i64(n, Base::Rational)).collect();
            coeffs.push(Scalar::one(Base::Rational));
            let cand = UniPoly::from_coeffs(Base::Rational, coeffs)?;
            let (_, rem) = m.divmod(&cand)?;
            if rem.is_zero() {
                return Err(Error::ReducibleModulus { factor: cand.to_string() });
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] <= b {
                    break;
                }
                digits[pos] = -b;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Ok(IrreducibilityStatus::Verified)
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All positive divisors of |n| when |n| fits a u64 and is small enough to
/// enumerate; `None` otherwise.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let a = n.abs().to_u64()?;
    if a == 0 {
        return None;
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    let mut steps = 0u64;
    while i * i <= a {
        steps += 1;
        if steps > 10_000_000 {
            return None;
        }
        if a % i == 0 {
            divs.push(BigInt::from(i));
            if i != a / i {
                divs.push(BigInt::from(a / i));
            }
        }
        i += 1;
    }
    Some(divs)
}

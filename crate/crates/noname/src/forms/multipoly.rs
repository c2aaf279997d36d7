//! Small multivariate polynomials over K, just enough to expand the
//! product x_1...x_n in terms of the invariant generators.

use std::collections::BTreeMap;

use crate::forms::LinearForm;
use crate::splitting::field::FieldElement;

/// A multivariate polynomial keyed by exponent vectors. Zero coefficients
/// are never stored; the map order makes rendering deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, FieldElement>,
}

impl MultiPoly {
    pub fn constant(arity: usize, value: FieldElement) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; arity], value);
        }
        MultiPoly { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exponents: Vec<u32>, value: FieldElement) {
        if let Some(existing) = self.terms.get_mut(&exponents) {
            let sum = existing.add(&value);
            if sum.is_zero() {
                self.terms.remove(&exponents);
            } else {
                *existing = sum;
            }
        } else if !value.is_zero() {
            self.terms.insert(exponents, value);
        }
    }

    /// Multiplies by a linear form in the same variables.
    pub fn mul_linear(&self, form: &LinearForm) -> MultiPoly {
        assert_eq!(self.arity, form.arity(), "arity mismatch");
        let mut out = MultiPoly { arity: self.arity, terms: BTreeMap::new() };
        for (exps, coeff) in &self.terms {
            for j in 0..self.arity {
                let c = form.coeff(j);
                if c.is_zero() {
                    continue;
                }
                let mut e = exps.clone();
                e[j] += 1;
                out.insert(e, coeff.mul(c));
            }
        }
        out
    }

    /// True when every stored exponent vector sums to `degree`.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    /// True iff every coefficient lies in the base field (no coordinate
    /// beyond the constant slot).
    pub fn coefficients_in_base(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.coords()[1..].iter().all(crate::exact::Scalar::is_zero))
    }
}

/// Distributes the product of `n` linear forms over one variable set; the
/// result is homogeneous of degree `n`.
pub fn expand_product(forms: &[LinearForm]) -> MultiPoly {
    assert!(!forms.is_empty(), "empty product");
    let arity = forms[0].arity();
    let one_elem = {
        let c = forms[0].coeff(0);
        let zero = c.sub(c);
        zero.add(&crate::splitting::field::FieldElement::one(c.descriptor()))
    };
    let mut acc = MultiPoly::constant(arity, one_elem);
    for f in forms {
        assert_eq!(f.arity(), arity, "arity mismatch");
        acc = acc.mul_linear(f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Base;
    use crate::exact::UniPoly;
    use crate::splitting::field::{FieldDescriptor, FieldElement};
    use std::sync::Arc;

    fn sqrt2() -> Arc<FieldDescriptor> {
        FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
            "t",
            false,
        )
        .unwrap()
    }

    #[test]
    fn single_form_product() {
        let desc = sqrt2();
        let c = FieldElement::generator(&desc);
        let f = LinearForm::new(vec![c.clone()]);
        let p = expand_product(&[f]);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms().get(&vec![1u32][..].to_vec()), Some(&c));
        assert!(p.is_homogeneous(1));
    }

    #[test]
    fn difference_of_squares() {
        let desc = sqrt2();
        let one = FieldElement::one(&desc);
        let sum = LinearForm::new(vec![one.clone(), one.clone()]);
        let diff = LinearForm::new(vec![one.clone(), one.neg()]);
        let p = expand_product(&[sum, diff]);
        // y1^2 - y2^2: cross terms cancel
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.terms().get(&vec![2u32, 0]), Some(&one));
        assert_eq!(p.terms().get(&vec![0u32, 2]), Some(&one.neg()));
        assert!(p.is_homogeneous(2));
        assert!(p.coefficients_in_base());
    }

    #[test]
    fn base_membership_detects_irrational_coefficient() {
        let desc = sqrt2();
        let t = FieldElement::generator(&desc);
        let p = MultiPoly::constant(2, t);
        assert!(!p.coefficients_in_base());
        let q = MultiPoly::constant(2, FieldElement::from_int(&desc, -2));
        assert!(q.coefficients_in_base());
    }
}

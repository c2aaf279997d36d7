//! Exact matrices over the extension field K.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::splitting::field::{FieldDescriptor, FieldElement};

/// A rectangular matrix with entries in one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl KMatrix {
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<KMatrix> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Usage("empty matrix".into()));
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(Error::Usage("matrix with zero columns".into()));
        }
        let desc = rows[0][0].descriptor().clone();
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Usage("ragged matrix".into()));
            }
            for e in row {
                if !FieldDescriptor::same(&desc, e.descriptor()) {
                    return Err(Error::Usage("matrix entries from different fields".into()));
                }
                data.push(e);
            }
        }
        Ok(KMatrix { rows: nrows, cols: ncols, data })
    }

    pub fn identity(n: usize, desc: &Arc<FieldDescriptor>) -> KMatrix {
        let mut data = vec![FieldElement::zero(desc); n * n];
        for i in 0..n {
            data[i * n + i] = FieldElement::one(desc);
        }
        KMatrix { rows: n, cols: n, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        self.data[0].descriptor()
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entrywise image under a map (e.g. a field automorphism).
    pub fn map<F: Fn(&FieldElement) -> FieldElement>(&self, f: F) -> KMatrix {
        KMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &KMatrix) -> Result<KMatrix> {
        if self.cols != other.rows {
            return Err(Error::Usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let desc = self.descriptor();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = FieldElement::zero(desc);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                data.push(acc);
            }
        }
        Ok(KMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Exact determinant by Gaussian elimination with division in K.
    /// The pivot is the first nonzero entry in each column; row swaps
    /// flip the sign.
    pub fn det_exact(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::Usage(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let desc = self.descriptor().clone();
        let n = self.rows;
        let mut m = self.data.clone();
        let at = |m: &Vec<FieldElement>, i: usize, j: usize| m[i * n + j].clone();
        let mut negate = false;
        let mut acc = FieldElement::one(&desc);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Ok(FieldElement::zero(&desc));
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                }
                negate = !negate;
            }
            let p = at(&m, col, col);
            acc = acc.mul(&p);
            let inv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = at(&m, r, col).mul(&inv);
                for c in col..n {
                    let delta = factor.mul(&at(&m, col, c));
                    m[r * n + c] = at(&m, r, c).sub(&delta);
                }
            }
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    /// Exact inverse by Gauss-Jordan elimination. The product with the
    /// input is checked against the identity before returning.
    pub fn invert_exact(&self) -> Result<KMatrix> {
        if !self.is_square() {
            return Err(Error::Usage(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let desc = self.descriptor().clone();
        let n = self.rows;
        let mut m = self.data.clone();
        let mut inv = KMatrix::identity(n, &desc).data;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p_inv = m[col * n + col].inv().expect("nonzero pivot");
            for j in 0..n {
                m[col * n + j] = m[col * n + j].mul(&p_inv);
                inv[col * n + j] = inv[col * n + j].mul(&p_inv);
            }
            for r in 0..n {
                if r == col || m[r * n + col].is_zero() {
                    continue;
                }
                let factor = m[r * n + col].clone();
                for j in 0..n {
                    let dm = factor.mul(&m[col * n + j]);
                    m[r * n + j] = m[r * n + j].sub(&dm);
                    let di = factor.mul(&inv[col * n + j]);
                    inv[r * n + j] = inv[r * n + j].sub(&di);
                }
            }
        }
        let result = KMatrix { rows: n, cols: n, data: inv };
        let product = self.mul(&result)?;
        if product != KMatrix::identity(n, &desc) {
            return Err(Error::Internal("inverse failed its product check".into()));
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Base;
    use crate::exact::UniPoly;
    use crate::splitting::field::FieldDescriptor;

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
    fn identity_and_singular_cases() {
        let desc = sqrt2();
        let id = KMatrix::identity(3, &desc);
        assert_eq!(id.det_exact().unwrap(), FieldElement::one(&desc));
        assert_eq!(id.invert_exact().unwrap(), id);

        let one = FieldElement::one(&desc);
        let ones = KMatrix::from_rows(vec![
            vec![one.clone(), one.clone()],
            vec![one.clone(), one.clone()],
        ])
        .unwrap();
        assert!(ones.det_exact().unwrap().is_zero());
        assert!(matches!(ones.invert_exact(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn conjugate_matrix_inverse_in_qsqrt2() {
        // M = [[1+t, 1-t], [1-t, 1+t]] with t = sqrt 2, det = 4t
        let desc = sqrt2();
        let one = FieldElement::one(&desc);
        let t = FieldElement::generator(&desc);
        let m = KMatrix::from_rows(vec![
            vec![one.add(&t), one.sub(&t)],
            vec![one.sub(&t), one.add(&t)],
        ])
        .unwrap();
        let det = m.det_exact().unwrap();
        let four_t = t.scalar_mul(&crate::exact::Scalar::from_i64(4, Base::Rational));
        assert_eq!(det, four_t);
        let inv = m.invert_exact().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), KMatrix::identity(2, &desc));
        assert_eq!(inv.mul(&m).unwrap(), KMatrix::identity(2, &desc));
    }

    #[test]
    fn row_swap_sign() {
        let desc = sqrt2();
        let one = FieldElement::one(&desc);
        let zero = FieldElement::zero(&desc);
        let m = KMatrix::from_rows(vec![
            vec![zero.clone(), one.clone()],
            vec![one.clone(), zero.clone()],
        ])
        .unwrap();
        assert_eq!(m.det_exact().unwrap(), one.neg());
    }
}

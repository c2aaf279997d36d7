//! Moore matrices over finite fields: entry (i, j) is alpha_i raised to
//! the q^(j-1) power, with columns generated by repeated Frobenius.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::scalar::Base;
use crate::forms::KMatrix;
use crate::splitting::field::{FieldDescriptor, FieldElement};
use crate::splitting::galois::frobenius;

#[derive(Clone, Debug)]
pub struct MooreInstance {
    desc: Arc<FieldDescriptor>,
    tuple: Vec<FieldElement>,
    matrix: KMatrix,
}

impl MooreInstance {
    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    pub fn tuple(&self) -> &[FieldElement] {
        &self.tuple
    }

    pub fn matrix(&self) -> &KMatrix {
        &self.matrix
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        self.matrix.det_exact()
    }

    /// Linear independence of the tuple over the prime field, by exact
    /// rank of the coordinate matrix.
    pub fn tuple_independent(&self) -> bool {
        let rows: Vec<Vec<crate::exact::Scalar>> =
            self.tuple.iter().map(|a| a.coords().to_vec()).collect();
        linalg::rank(&rows) == self.tuple.len()
    }
}

/// Builds the n x n Moore matrix of a tuple of n elements of F_(p^d),
/// n <= d.
pub fn moore_matrix(desc: &Arc<FieldDescriptor>, tuple: &[FieldElement]) -> Result<MooreInstance> {
    let Base::Prime(_) = desc.base() else {
        return Err(Error::Usage("Moore matrices require a prime base field".into()));
    };
    let n = tuple.len();
    if n == 0 {
        return Err(Error::Usage("empty tuple".into()));
    }
    if n > desc.degree() {
        return Err(Error::Usage(format!(
            "tuple of length {n} exceeds the extension degree {}",
            desc.degree()
        )));
    }
    for a in tuple {
        if !FieldDescriptor::same(desc, a.descriptor()) {
            return Err(Error::Usage("tuple element from a different field".into()));
        }
    }
    let frob = frobenius(desc, 1)?;
    let mut rows = Vec::with_capacity(n);
    for a in tuple {
        let mut row = Vec::with_capacity(n);
        let mut power = a.clone();
        for j in 0..n {
            if j > 0 {
                power = frob.apply(&power);
            }
            row.push(power.clone());
        }
        rows.push(row);
    }
    Ok(MooreInstance {
        desc: desc.clone(),
        tuple: tuple.to_vec(),
        matrix: KMatrix::from_rows(rows)?,
    })
}

//! The generator constructions and their verification battery: building
//! the invariant generators y_i from coset sums of a normal element,
//! assembling the coordinate matrices, and certifying invertibility,
//! invariance and exact round-trips.

pub mod moore;
pub mod signdet;

pub use moore::{moore_matrix, MooreInstance};
pub use signdet::{check_signdet_hypotheses, SigndetReport};

use crate::error::{Error, Result};
use crate::forms::multipoly::{expand_product, MultiPoly};
use crate::forms::{act_affine, act_linear, AffineForm, KMatrix, LinearForm};
use crate::group::iso::GroupFieldIso;
use crate::group::{Classification, Orbits};
use crate::splitting::field::FieldElement;
use crate::splitting::normal::is_normal;

/// Which construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Permutation construction for pure permutation groups, affine
    /// construction otherwise.
    Auto,
    Permutation,
    Signed,
}

/// The generators, coordinate matrix and verification flags produced by a
/// successful construction.
#[derive(Clone, Debug)]
pub enum CertificateKind {
    Permutation {
        y_forms: Vec<LinearForm>,
        matrix: KMatrix,
    },
    Signed {
        y_forms: Vec<AffineForm>,
        /// The n x n coefficient block M.
        matrix: KMatrix,
        /// M with the bookkeeping row (1, 0, ..., 0) and the constant
        /// column c prepended, as the proof lays it out.
        m_star: KMatrix,
        constants: Vec<FieldElement>,
    },
}

#[derive(Clone, Debug)]
pub struct RationalityCertificate {
    pub kind: CertificateKind,
    pub alpha: FieldElement,
    pub determinant: FieldElement,
    pub invariance_checked: bool,
    pub roundtrip_checked: bool,
    pub orbit_blocks: Orbits,
}

impl RationalityCertificate {
    pub fn construction_name(&self) -> &'static str {
        match self.kind {
            CertificateKind::Permutation { .. } => "permutation",
            CertificateKind::Signed { .. } => "signed",
        }
    }
}

/// Conjugates of `alpha` indexed by roster element.
fn conjugates(iso: &GroupFieldIso, alpha: &FieldElement) -> Vec<FieldElement> {
    (0..iso.group().order()).map(|e| iso.apply(e, alpha)).collect()
}

/// The linear generators and matrix of the permutation construction:
/// entry (i, j) is the sum of g(alpha) over the coset cell G_{i,j}.
///
/// No normality or purity checks here; callers that need the
/// invertibility and invariance guarantees go through
/// [`build_permutation`].
pub fn permutation_matrix_for(
    iso: &GroupFieldIso,
    alpha: &FieldElement,
) -> Result<(Vec<LinearForm>, KMatrix)> {
    let group = iso.group();
    let n = group.dimension();
    let desc = iso.descriptor();
    let sigma_alpha = conjugates(iso, alpha);
    let table = group.coset_table();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = FieldElement::zero(desc);
            for &e in table.union(i, j).iter() {
                acc = acc.add(&sigma_alpha[e]);
            }
            row.push(acc);
        }
        rows.push(row);
    }
    let forms: Vec<LinearForm> = rows.iter().cloned().map(LinearForm::new).collect();
    Ok((forms, KMatrix::from_rows(rows)?))
}

/// The affine generators of the signed construction: constants
/// c_i = sum over G^-_{i,j} of g(alpha), coefficients
/// m_{i,j} = (sum over G^+_{i,j}) - (sum over G^-_{i,j}).
pub fn signed_matrix_for(
    iso: &GroupFieldIso,
    alpha: &FieldElement,
) -> Result<(Vec<AffineForm>, KMatrix, Vec<FieldElement>)> {
    let group = iso.group();
    let n = group.dimension();
    let desc = iso.descriptor();
    let sigma_alpha = conjugates(iso, alpha);
    let table = group.coset_table();
    let mut constants = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = FieldElement::zero(desc);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut plus = FieldElement::zero(desc);
            for &e in table.plus(i, j) {
                plus = plus.add(&sigma_alpha[e]);
            }
            let mut minus = FieldElement::zero(desc);
            for &e in table.minus(i, j) {
                minus = minus.add(&sigma_alpha[e]);
            }
            c = c.add(&minus);
            row.push(plus.sub(&minus));
        }
        constants.push(c);
        rows.push(row);
    }
    let forms: Vec<AffineForm> = rows
        .iter()
        .zip(&constants)
        .map(|(row, c)| AffineForm::new(c.clone(), row.clone()))
        .collect();
    Ok((forms, KMatrix::from_rows(rows)?, constants))
}

/// Assembles M* from M and c: leading row (1, 0, ..., 0), first column
/// (1, c_1, ..., c_n).
fn assemble_m_star(matrix: &KMatrix, constants: &[FieldElement]) -> Result<KMatrix> {
    let n = matrix.nrows();
    let desc = matrix.descriptor();
    let mut rows = Vec::with_capacity(n + 1);
    let mut top = vec![FieldElement::zero(desc); n + 1];
    top[0] = FieldElement::one(desc);
    rows.push(top);
    for i in 0..n {
        let mut row = Vec::with_capacity(n + 1);
        row.push(constants[i].clone());
        row.extend(matrix.row(i).iter().cloned());
        rows.push(row);
    }
    KMatrix::from_rows(rows)
}

/// Substitutes linear recovery forms (rows of M^-1 read over the y
/// variables) into one generator row; the result must be the standard
/// basis form. Exposed so certificates can be re-checked from a report.
pub fn roundtrip_linear(matrix: &KMatrix, inverse: &KMatrix) -> Result<bool> {
    let n = matrix.nrows();
    let desc = matrix.descriptor();
    let one = FieldElement::one(desc);
    for i in 0..n {
        let mut acc = vec![FieldElement::zero(desc); n];
        for j in 0..n {
            let scale = matrix.get(i, j);
            if scale.is_zero() {
                continue;
            }
            for (k, acc_k) in acc.iter_mut().enumerate() {
                *acc_k = acc_k.add(&scale.mul(inverse.get(j, k)));
            }
        }
        let expected = LinearForm::unit(n, i, &one);
        if LinearForm::new(acc) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Affine version: z_j is recovered as sum_k inv_{j,k} (y_k - c_k);
/// substituting back into y_i = c_i + sum_j m_{i,j} z_j must give exactly
/// the affine form y_i (zero constant, unit coefficients).
pub fn roundtrip_affine(
    matrix: &KMatrix,
    inverse: &KMatrix,
    constants: &[FieldElement],
) -> Result<bool> {
    let n = matrix.nrows();
    let desc = matrix.descriptor();
    let recovery: Vec<AffineForm> = (0..n)
        .map(|j| {
            let mut shift = FieldElement::zero(desc);
            for k in 0..n {
                shift = shift.add(&inverse.get(j, k).mul(&constants[k]));
            }
            AffineForm::new(shift.neg(), inverse.row(j).to_vec())
        })
        .collect();
    let one = FieldElement::one(desc);
    for i in 0..n {
        let mut constant = constants[i].clone();
        let mut coeffs = vec![FieldElement::zero(desc); n];
        for j in 0..n {
            let scale = matrix.get(i, j);
            if scale.is_zero() {
                continue;
            }
            constant = constant.add(&scale.mul(recovery[j].constant()));
            for (k, c) in coeffs.iter_mut().enumerate() {
                *c = c.add(&scale.mul(recovery[j].coeff(k)));
            }
        }
        let mut expected = vec![FieldElement::zero(desc); n];
        expected[i] = one.clone();
        if !constant.is_zero() || coeffs != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation construction with the full verification battery: the group
/// must be pure permutation and alpha normal; the determinant, invariance
/// under every group element and the exact round-trip are all checked.
pub fn build_permutation(
    iso: &GroupFieldIso,
    alpha: &FieldElement,
) -> Result<RationalityCertificate> {
    let group = iso.group();
    if group.classify() != Classification::PurePermutation {
        return Err(Error::Usage(
            "permutation construction requires a pure permutation group".into(),
        ));
    }
    if !is_normal(alpha, iso.presentation()) {
        return Err(Error::NotNormal);
    }
    let (y_forms, matrix) = permutation_matrix_for(iso, alpha)?;
    let determinant = matrix.det_exact()?;
    if determinant.is_zero() {
        return Err(Error::Internal(
            "coordinate matrix of a normal element is singular; the isomorphism input is broken"
                .into(),
        ));
    }
    for e in 0..group.order() {
        for (i, form) in y_forms.iter().enumerate() {
            if act_linear(e, iso, form)? != *form {
                return Err(Error::Internal(format!(
                    "generator y_{} is not fixed by group element {e}",
                    i + 1
                )));
            }
        }
    }
    let inverse = matrix.invert_exact()?;
    if !roundtrip_linear(&matrix, &inverse)? {
        return Err(Error::Internal("round-trip substitution failed".into()));
    }
    Ok(RationalityCertificate {
        kind: CertificateKind::Permutation { y_forms, matrix },
        alpha: alpha.clone(),
        determinant,
        invariance_checked: true,
        roundtrip_checked: true,
        orbit_blocks: group.orbits(),
    })
}

/// Affine construction for any subgroup of the signed permutation
/// matrices (pure groups allowed; the generators differ from the
/// permutation construction's).
pub fn build_signed(iso: &GroupFieldIso, alpha: &FieldElement) -> Result<RationalityCertificate> {
    let group = iso.group();
    if !is_normal(alpha, iso.presentation()) {
        return Err(Error::NotNormal);
    }
    let (y_forms, matrix, constants) = signed_matrix_for(iso, alpha)?;
    // det(M*) = det(M): computed on the block, M* materialized for reports
    let determinant = matrix.det_exact()?;
    if determinant.is_zero() {
        return Err(Error::Internal(
            "coordinate matrix of a normal element is singular; the isomorphism input is broken"
                .into(),
        ));
    }
    let m_star = assemble_m_star(&matrix, &constants)?;
    for e in 0..group.order() {
        for (i, form) in y_forms.iter().enumerate() {
            if act_affine(e, iso, form) != *form {
                return Err(Error::Internal(format!(
                    "generator y_{} is not fixed by group element {e}",
                    i + 1
                )));
            }
        }
    }
    let inverse = matrix.invert_exact()?;
    if !roundtrip_affine(&matrix, &inverse, &constants)? {
        return Err(Error::Internal("round-trip substitution failed".into()));
    }
    Ok(RationalityCertificate {
        kind: CertificateKind::Signed { y_forms, matrix, m_star, constants },
        alpha: alpha.clone(),
        determinant,
        invariance_checked: true,
        roundtrip_checked: true,
        orbit_blocks: group.orbits(),
    })
}

/// Top-level driver: re-verifies the presentation, checks normality and
/// dispatches on the requested construction.
pub fn certify(
    iso: &GroupFieldIso,
    alpha: &FieldElement,
    construction: Construction,
) -> Result<RationalityCertificate> {
    let report = iso.presentation().verify();
    if !report.ok {
        return Err(Error::PresentationInvalid(
            report.violation.unwrap_or_else(|| "unknown violation".into()),
        ));
    }
    match construction {
        Construction::Permutation => build_permutation(iso, alpha),
        Construction::Signed => build_signed(iso, alpha),
        Construction::Auto => match iso.group().classify() {
            Classification::PurePermutation => build_permutation(iso, alpha),
            Classification::Signed => build_signed(iso, alpha),
        },
    }
}

/// Expands the product x_1...x_n as a polynomial in the generators of a
/// permutation certificate and reports whether every coefficient lies in
/// the base field.
pub fn product_in_y(cert: &RationalityCertificate) -> Result<(MultiPoly, bool)> {
    let CertificateKind::Permutation { matrix, .. } = &cert.kind else {
        return Err(Error::Usage(
            "product expansion is defined for permutation certificates".into(),
        ));
    };
    let inverse = matrix.invert_exact()?;
    let n = matrix.nrows();
    let rows: Vec<LinearForm> = (0..n)
        .map(|j| LinearForm::new(inverse.row(j).to_vec()))
        .collect();
    let poly = expand_product(&rows);
    let in_base = poly.coefficients_in_base();
    Ok((poly, in_base))
}

/// The coset-sum partition check: re-adding each row's plus and minus
/// sums recovers the full trace of alpha, identically for every row.
pub fn trace_of(iso: &GroupFieldIso, alpha: &FieldElement) -> FieldElement {
    let mut acc = FieldElement::zero(iso.descriptor());
    for sigma in conjugates(iso, alpha) {
        acc = acc.add(&sigma);
    }
    acc
}

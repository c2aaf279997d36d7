//! The versioned JSON report emitted by `parametrize` and re-checked by
//! `verify`. Field elements travel as vectors of canonical coefficient
//! strings, so reports are lossless and byte-deterministic for a fixed
//! config and seed.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use noname::exact::Scalar;
use noname::forms::render;
use noname::{
    AffineForm, CertificateKind, FieldDescriptor, FieldElement, KMatrix, LinearForm, MatrixGroup,
    RationalityCertificate,
};

use crate::config::BaseSpec;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

pub type CoordVec = Vec<String>;

fn coords_of(e: &FieldElement) -> CoordVec {
    e.coords().iter().map(|c| c.to_string()).collect()
}

fn matrix_coords(m: &KMatrix) -> Vec<Vec<CoordVec>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(coords_of).collect())
        .collect()
}

fn one_indexed(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    blocks
        .iter()
        .map(|b| b.iter().map(|i| i + 1).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSection {
    pub order: usize,
    pub classification: String,
    pub orbits: Vec<Vec<usize>>,
    pub stabilizer_sizes: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldSection {
    pub base: BaseSpec,
    pub modulus: CoordVec,
    pub degree: usize,
    pub generator_name: String,
    pub irreducibility: String,
    pub alpha: CoordVec,
    pub alpha_normal: bool,
    pub alpha_searched: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateSection {
    pub construction: String,
    /// The n x n coordinate matrix M, rows of coefficient vectors.
    pub matrix: Vec<Vec<CoordVec>>,
    /// Constant column c of the signed construction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constants: Option<Vec<CoordVec>>,
    /// The (n+1) x (n+1) bordered matrix of the signed construction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_star: Option<Vec<Vec<CoordVec>>>,
    pub determinant: CoordVec,
    /// Human-readable generators, one per line.
    pub y_forms: Vec<String>,
    pub invariance_checked: bool,
    pub roundtrip_checked: bool,
    pub orbit_blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub group: GroupSection,
    pub field: FieldSection,
    pub certificate: CertificateSection,
}

impl Report {
    pub fn assemble(
        group: &MatrixGroup,
        desc: &Arc<FieldDescriptor>,
        cert: &RationalityCertificate,
        alpha_searched: bool,
        seed: u64,
    ) -> Report {
        let orbits = group.orbits();
        let group_section = GroupSection {
            order: group.order(),
            classification: group.classify().to_string(),
            orbits: one_indexed(&orbits.blocks),
            stabilizer_sizes: (0..group.dimension()).map(|i| group.stabilizer(i).len()).collect(),
        };
        let field_section = FieldSection {
            base: BaseSpec::from_base(desc.base()),
            modulus: desc.modulus().coeffs().iter().map(Scalar::to_string).collect(),
            degree: desc.degree(),
            generator_name: desc.generator_name().to_string(),
            irreducibility: match desc.irreducibility() {
                noname::IrreducibilityStatus::Verified => "verified".into(),
                noname::IrreducibilityStatus::Asserted => "asserted".into(),
            },
            alpha: coords_of(&cert.alpha),
            alpha_normal: true,
            alpha_searched,
            seed,
        };
        let certificate = match &cert.kind {
            CertificateKind::Permutation { y_forms, matrix } => CertificateSection {
                construction: "permutation".into(),
                matrix: matrix_coords(matrix),
                constants: None,
                m_star: None,
                determinant: coords_of(&cert.determinant),
                y_forms: y_forms.iter().map(LinearForm::to_string).collect(),
                invariance_checked: cert.invariance_checked,
                roundtrip_checked: cert.roundtrip_checked,
                orbit_blocks: one_indexed(&cert.orbit_blocks.blocks),
            },
            CertificateKind::Signed { y_forms, matrix, m_star, constants } => CertificateSection {
                construction: "signed".into(),
                matrix: matrix_coords(matrix),
                constants: Some(constants.iter().map(coords_of).collect()),
                m_star: Some(matrix_coords(m_star)),
                determinant: coords_of(&cert.determinant),
                y_forms: y_forms.iter().map(AffineForm::to_string).collect(),
                invariance_checked: cert.invariance_checked,
                roundtrip_checked: cert.roundtrip_checked,
                orbit_blocks: one_indexed(&cert.orbit_blocks.blocks),
            },
        };
        Report {
            schema: SCHEMA_VERSION,
            group: group_section,
            field: field_section,
            certificate,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn load(path: &Path) -> Result<Report, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("bad report {}: {e}", path.display())))
    }
}

/// Parses a coefficient-string vector back into a field element.
pub fn element_from_coords(
    desc: &Arc<FieldDescriptor>,
    coords: &[String],
) -> Result<FieldElement, CliError> {
    let scalars: Result<Vec<Scalar>, CliError> = coords
        .iter()
        .map(|s| {
            let r = noname::exact::parse_rat(s)
                .map_err(|_| CliError::input(format!("bad coefficient {s:?} in report")))?;
            Scalar::from_rat(&r, desc.base())
                .map_err(|_| CliError::input(format!("coefficient {s:?} does not fit the base")))
        })
        .collect();
    FieldElement::from_coords(desc, scalars?).map_err(CliError::from)
}

/// Parses a coordinate matrix back into a KMatrix.
pub fn kmatrix_from_coords(
    desc: &Arc<FieldDescriptor>,
    rows: &[Vec<CoordVec>],
) -> Result<KMatrix, CliError> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for coords in row {
            r.push(element_from_coords(desc, coords)?);
        }
        out.push(r);
    }
    KMatrix::from_rows(out).map_err(CliError::from)
}

/// Text rendering of the certificate, shared by the parametrize text
/// format.
pub fn render_certificate_text(cert: &RationalityCertificate) -> Vec<String> {
    let mut lines = Vec::new();
    match &cert.kind {
        CertificateKind::Permutation { y_forms, matrix } => {
            for (i, y) in y_forms.iter().enumerate() {
                lines.push(format!("y{} = {y}", i + 1));
            }
            lines.push("M:".into());
            lines.extend(render::matrix_lines(matrix));
        }
        CertificateKind::Signed { y_forms, m_star, .. } => {
            for (i, y) in y_forms.iter().enumerate() {
                lines.push(format!("y{} = {y}", i + 1));
            }
            lines.push("M* (rows over 1, z1..zn):".into());
            lines.extend(render::matrix_lines(m_star));
        }
    }
    lines.push(format!("det(M) = {}", cert.determinant));
    lines
}

//! Re-checks an emitted report from scratch: normality, invariance,
//! determinant, round trip, and finally re-derivation from alpha.

use std::path::Path;

use noname::construct::{roundtrip_affine, roundtrip_linear, signed_matrix_for};
use noname::{
    act_affine, act_linear, construct::permutation_matrix_for, is_normal, AffineForm, KMatrix,
    LinearForm,
};

use crate::config::ProblemConfig;
use crate::pipeline::{build_problem, BuiltProblem};
use crate::report::{element_from_coords, kmatrix_from_coords, Report, SCHEMA_VERSION};
use crate::CliError;

pub fn run(report_path: &Path, config_path: &Path) -> Result<(), CliError> {
    let report = Report::load(report_path)?;
    let config = ProblemConfig::load(config_path)?;
    if report.schema != SCHEMA_VERSION {
        return Err(CliError::input(format!(
            "unsupported report schema {}",
            report.schema
        )));
    }
    let problem = build_problem(&config)?;
    check_consistency(&report, &config, &problem)?;

    // normality of the reported alpha
    let alpha = element_from_coords(&problem.desc, &report.field.alpha)?;
    if !is_normal(&alpha, &problem.presentation) {
        return Err(CliError::verify("normality", "alpha is not a normal element".into()));
    }

    let matrix = kmatrix_from_coords(&problem.desc, &report.certificate.matrix)?;
    let n = problem.group.dimension();
    if matrix.nrows() != n || matrix.ncols() != n {
        return Err(CliError::input(format!(
            "report matrix is {}x{}, expected {n}x{n}",
            matrix.nrows(),
            matrix.ncols()
        )));
    }

    match report.certificate.construction.as_str() {
        "permutation" => verify_permutation(&report, &problem, &alpha, &matrix)?,
        "signed" => verify_signed(&report, &problem, &alpha, &matrix)?,
        other => {
            return Err(CliError::input(format!("unknown construction {other:?} in report")));
        }
    }
    println!("verification passed: normality, invariance, determinant, round trip, derivation");
    Ok(())
}

fn check_consistency(
    report: &Report,
    config: &ProblemConfig,
    problem: &BuiltProblem,
) -> Result<(), CliError> {
    if report.field.degree != config.degree() {
        return Err(CliError::input(format!(
            "field degree mismatch: report has {}, config has {}",
            report.field.degree,
            config.degree()
        )));
    }
    if report.field.base != config.base {
        return Err(CliError::input("base field mismatch between report and config".into()));
    }
    let modulus_strings: Vec<String> = problem
        .desc
        .modulus()
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect();
    if report.field.modulus != modulus_strings {
        return Err(CliError::input("modulus mismatch between report and config".into()));
    }
    if report.group.order != problem.group.order() {
        return Err(CliError::input(format!(
            "group order mismatch: report has {}, config closure has {}",
            report.group.order,
            problem.group.order()
        )));
    }
    Ok(())
}

fn check_determinant(report: &Report, matrix: &KMatrix, problem: &BuiltProblem) -> Result<(), CliError> {
    let det = matrix.det_exact().map_err(CliError::from)?;
    if det.is_zero() {
        return Err(CliError::verify("determinant", "coordinate matrix is singular".into()));
    }
    let reported = element_from_coords(&problem.desc, &report.certificate.determinant)?;
    if det != reported {
        return Err(CliError::verify(
            "determinant",
            format!("recomputed determinant {det} differs from the reported {reported}"),
        ));
    }
    Ok(())
}

fn verify_permutation(
    report: &Report,
    problem: &BuiltProblem,
    alpha: &noname::FieldElement,
    matrix: &KMatrix,
) -> Result<(), CliError> {
    let n = matrix.nrows();
    let forms: Vec<LinearForm> =
        (0..n).map(|i| LinearForm::new(matrix.row(i).to_vec())).collect();
    for e in 0..problem.group.order() {
        for (i, y) in forms.iter().enumerate() {
            let acted = act_linear(e, &problem.iso, y).map_err(CliError::from)?;
            if acted != *y {
                return Err(CliError::verify(
                    "invariance",
                    format!("y{} is not fixed by group element {e}", i + 1),
                ));
            }
        }
    }
    check_determinant(report, matrix, problem)?;
    let inverse = matrix
        .invert_exact()
        .map_err(|_| CliError::verify("roundtrip", "matrix inversion failed".into()))?;
    if !roundtrip_linear(matrix, &inverse).map_err(CliError::from)? {
        return Err(CliError::verify("roundtrip", "substitution did not return the basis".into()));
    }
    let (_, derived) = permutation_matrix_for(&problem.iso, alpha).map_err(CliError::from)?;
    if derived != *matrix {
        return Err(CliError::verify(
            "derivation",
            "matrix does not match the coset sums of the reported alpha".into(),
        ));
    }
    Ok(())
}

fn verify_signed(
    report: &Report,
    problem: &BuiltProblem,
    alpha: &noname::FieldElement,
    matrix: &KMatrix,
) -> Result<(), CliError> {
    let n = matrix.nrows();
    let Some(constant_coords) = &report.certificate.constants else {
        return Err(CliError::input("signed report without a constants column".into()));
    };
    if constant_coords.len() != n {
        return Err(CliError::input("constants column has the wrong length".into()));
    }
    let constants: Result<Vec<noname::FieldElement>, CliError> = constant_coords
        .iter()
        .map(|c| element_from_coords(&problem.desc, c))
        .collect();
    let constants = constants?;
    let forms: Vec<AffineForm> = (0..n)
        .map(|i| AffineForm::new(constants[i].clone(), matrix.row(i).to_vec()))
        .collect();
    for e in 0..problem.group.order() {
        for (i, y) in forms.iter().enumerate() {
            if act_affine(e, &problem.iso, y) != *y {
                return Err(CliError::verify(
                    "invariance",
                    format!("y{} is not fixed by group element {e}", i + 1),
                ));
            }
        }
    }
    check_determinant(report, matrix, problem)?;
    // the bordered matrix, if present, must match its definition
    if let Some(m_star_coords) = &report.certificate.m_star {
        let m_star = kmatrix_from_coords(&problem.desc, m_star_coords)?;
        let desc = &problem.desc;
        let one = noname::FieldElement::one(desc);
        let mut ok = m_star.nrows() == n + 1 && m_star.ncols() == n + 1;
        if ok {
            ok &= *m_star.get(0, 0) == one;
            for j in 1..=n {
                ok &= m_star.get(0, j).is_zero();
            }
            for i in 0..n {
                ok &= *m_star.get(i + 1, 0) == constants[i];
                for j in 0..n {
                    ok &= m_star.get(i + 1, j + 1) == matrix.get(i, j);
                }
            }
        }
        if !ok {
            return Err(CliError::verify(
                "invariance",
                "bordered matrix is inconsistent with the coefficient block".into(),
            ));
        }
    }
    let inverse = matrix
        .invert_exact()
        .map_err(|_| CliError::verify("roundtrip", "matrix inversion failed".into()))?;
    if !roundtrip_affine(matrix, &inverse, &constants).map_err(CliError::from)? {
        return Err(CliError::verify("roundtrip", "substitution did not return the basis".into()));
    }
    let (_, derived, derived_constants) =
        signed_matrix_for(&problem.iso, alpha).map_err(CliError::from)?;
    if derived != *matrix || derived_constants != constants {
        return Err(CliError::verify(
            "derivation",
            "matrix does not match the coset sums of the reported alpha".into(),
        ));
    }
    Ok(())
}

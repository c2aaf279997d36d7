//! Deterministic text rendering for forms, matrices and multivariate
//! polynomials. Field elements print as polynomials in the descriptor's
//! generator symbol with ascending powers.

use crate::forms::kmatrix::KMatrix;
use crate::forms::multipoly::MultiPoly;
use crate::splitting::field::FieldElement;

/// Renders one coefficient as a factor: `1` disappears, compound
/// expressions get parentheses.
fn coeff_factor(c: &FieldElement, var: &str) -> String {
    if c.is_one() {
        return var.to_string();
    }
    let body = c.to_string();
    let compound = body[1..].contains(['+', '-']);
    if compound {
        format!("({body})*{var}")
    } else {
        format!("{body}*{var}")
    }
}

/// `constant + coeffs[0]*v1 + coeffs[1]*v2 + ...`, skipping zeros.
pub fn form_string(constant: Option<&FieldElement>, coeffs: &[FieldElement], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    if let Some(c) = constant {
        if !c.is_zero() {
            let body = c.to_string();
            if body[1..].contains(['+', '-']) {
                parts.push(format!("({body})"));
            } else {
                parts.push(body);
            }
        }
    }
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        parts.push(coeff_factor(c, &format!("{var}{}", j + 1)));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// One bracketed line per row.
pub fn matrix_lines(m: &KMatrix) -> Vec<String> {
    (0..m.nrows())
        .map(|i| {
            let entries: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect()
}

/// Monomials in `y` variables with deterministic (map) term order.
pub fn multipoly_string(p: &MultiPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (exps, coeff) in p.terms() {
        let mut mono = String::new();
        for (j, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !mono.is_empty() {
                mono.push('*');
            }
            if e == 1 {
                mono.push_str(&format!("{var}{}", j + 1));
            } else {
                mono.push_str(&format!("{var}{}^{e}", j + 1));
            }
        }
        if mono.is_empty() {
            parts.push(coeff.to_string());
        } else {
            parts.push(coeff_factor(coeff, &mono));
        }
    }
    parts.join(" + ")
}

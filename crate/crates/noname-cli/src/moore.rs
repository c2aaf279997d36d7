//! The Moore-matrix demo: build F_(p^e), evaluate a tuple or a batch of
//! random draws, and cross-check invertibility against linear
//! independence.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use noname::exact::{is_prime, Base, Scalar, UniPoly};
use noname::forms::render;
use noname::{moore_matrix, Error, FieldDescriptor, FieldElement};

use crate::style::Style;
use crate::CliError;

/// The lexicographically first monic irreducible polynomial of degree e
/// over F_p, found by letting the descriptor constructor reject the
/// reducible candidates.
fn first_irreducible(p: u64, e: u32) -> Result<Arc<FieldDescriptor>, CliError> {
    let base = Base::prime(p).map_err(CliError::from)?;
    let e = e as usize;
    let mut digits = vec![0u64; e];
    loop {
        let mut coeffs: Vec<Scalar> = digits
            .iter()
            .map(|&r| Scalar::from_i64(r as i64, base))
            .collect();
        coeffs.push(Scalar::one(base));
        let modulus = UniPoly::from_coeffs(base, coeffs).map_err(CliError::from)?;
        match FieldDescriptor::new(base, modulus, "t", false) {
            Ok(desc) => return Ok(desc),
            Err(Error::ReducibleModulus { .. }) => {}
            Err(e) => return Err(e.into()),
        }
        let mut pos = 0;
        loop {
            if pos == e {
                return Err(CliError::internal(format!(
                    "no irreducible polynomial of degree {e} over F_{p}"
                )));
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Parses one polynomial expression in t: sums of `c`, `t^k` and `c*t^k`
/// terms, e.g. "t^2+2*t+1".
fn parse_element(desc: &Arc<FieldDescriptor>, text: &str) -> Result<FieldElement, CliError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CliError::input("empty tuple component".into()));
    }
    let bad = |why: &str| CliError::input(format!("bad tuple component {text:?}: {why}"));
    let mut acc = FieldElement::zero(desc);
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        let end = rest
            .char_indices()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map_or(rest.len(), |(i, _)| i);
        let term = &rest[..end];
        // term = INT | INT '*'? t-part | t-part, with t-part = t ('^' INT)?
        let (coeff_text, var_text) = match term.find('t') {
            Some(pos) => (&term[..pos], &term[pos..]),
            None => (term, ""),
        };
        let coeff: i64 = if coeff_text.is_empty() {
            1
        } else {
            coeff_text
                .trim_end_matches('*')
                .parse()
                .map_err(|_| bad("integer coefficient expected"))?
        };
        let power: u32 = if var_text.is_empty() {
            0
        } else if var_text == "t" {
            1
        } else {
            let exp = var_text
                .strip_prefix("t^")
                .ok_or_else(|| bad("variable part must be t or t^k"))?;
            exp.parse().map_err(|_| bad("integer exponent expected"))?
        };
        let gen_power = FieldElement::generator(desc).pow(power as u64);
        let scaled = gen_power.scalar_mul(&Scalar::from_i64(sign * coeff, desc.base()));
        acc = acc.add(&scaled);
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
    Ok(acc)
}

fn random_element(desc: &Arc<FieldDescriptor>, p: u64, rng: &mut ChaCha8Rng) -> FieldElement {
    let coords: Vec<i64> = (0..desc.degree())
        .map(|_| rng.gen_range(0..p) as i64)
        .collect();
    FieldElement::from_i64_coords(desc, &coords).expect("coords fit the degree")
}

pub fn run(
    p: u64,
    e: u32,
    tuple: Option<&str>,
    random: Option<u64>,
    seed: u64,
    n: Option<usize>,
) -> Result<(), CliError> {
    if !is_prime(p) {
        return Err(CliError::input(format!("invalid p: {p} is not prime")));
    }
    if e == 0 {
        return Err(CliError::input("e must be at least 1".into()));
    }
    let desc = first_irreducible(p, e)?;
    let style = Style::detect();
    println!(
        "{} F_{p}[t]/({}) = F_{}",
        style.bold("field:"),
        desc.modulus(),
        (p as u128).pow(e),
    );

    match (tuple, random) {
        (Some(text), None) => {
            let components: Result<Vec<FieldElement>, CliError> =
                text.split(',').map(|part| parse_element(&desc, part)).collect();
            let tuple = components?;
            let instance = moore_matrix(&desc, &tuple).map_err(CliError::from)?;
            let rendered: Vec<String> = tuple.iter().map(FieldElement::to_string).collect();
            println!("tuple: ({})", rendered.join(", "));
            println!("M:");
            for line in render::matrix_lines(instance.matrix()) {
                println!("{line}");
            }
            let det = instance.determinant().map_err(CliError::from)?;
            let independent = instance.tuple_independent();
            println!("det = {det}");
            println!(
                "independent over F_{p}: {}; invertible: {}",
                if independent { "yes" } else { "no" },
                if det.is_zero() { "no" } else { "yes" },
            );
            if independent == det.is_zero() {
                return Err(CliError::internal(
                    "independence and invertibility disagree".into(),
                ));
            }
            Ok(())
        }
        (None, Some(draws)) => {
            let length = n.unwrap_or(e as usize);
            if length > e as usize {
                return Err(CliError::input(format!(
                    "tuple length {length} exceeds the extension degree {e}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut invertible = 0u64;
            let mut agreement = 0u64;
            for _ in 0..draws {
                let tuple: Vec<FieldElement> =
                    (0..length).map(|_| random_element(&desc, p, &mut rng)).collect();
                let instance = moore_matrix(&desc, &tuple).map_err(CliError::from)?;
                let nonzero = !instance.determinant().map_err(CliError::from)?.is_zero();
                if nonzero {
                    invertible += 1;
                }
                if nonzero == instance.tuple_independent() {
                    agreement += 1;
                }
            }
            println!(
                "draws: {draws}, tuple length {length}, invertible: {invertible}, singular: {}",
                draws - invertible
            );
            let percent = if draws == 0 { 100.0 } else { 100.0 * agreement as f64 / draws as f64 };
            println!("independence/invertibility agreement: {agreement}/{draws} ({percent:.0}%)");
            if agreement != draws {
                return Err(CliError::internal(
                    "independence and invertibility disagree on some draw".into(),
                ));
            }
            Ok(())
        }
        (None, None) => Err(CliError::input("pass --tuple or --random".into())),
        (Some(_), Some(_)) => unreachable!("clap forbids the combination"),
    }
}

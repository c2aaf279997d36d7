//! The end-to-end driver: build, certify, report.

use std::path::Path;
use std::time::Instant;

use noname::certify;

use crate::config::ProblemConfig;
use crate::pipeline::{build_problem, resolve_alpha};
use crate::report::{render_certificate_text, Report};
use crate::style::Style;
use crate::CliError;

#[allow(clippy::too_many_arguments)]
pub fn run(
    config_path: &Path,
    out: Option<&Path>,
    json_to_stdout: bool,
    seed_override: Option<u64>,
    find_alpha: bool,
    construction_override: Option<noname::Construction>,
) -> Result<(), CliError> {
    let total = Instant::now();
    let config = ProblemConfig::load(config_path)?;
    let seed = seed_override.unwrap_or(config.seed);
    let construction = construction_override.unwrap_or_else(|| config.construction());

    let build_start = Instant::now();
    let problem = build_problem(&config)?;
    let build_ms = build_start.elapsed().as_millis();

    let alpha_start = Instant::now();
    let (alpha, searched) = resolve_alpha(&config, &problem, seed, find_alpha)?;
    let alpha_ms = alpha_start.elapsed().as_millis();

    let certify_start = Instant::now();
    let cert = certify(&problem.iso, &alpha, construction)?;
    let certify_ms = certify_start.elapsed().as_millis();

    let report = Report::assemble(&problem.group, &problem.desc, &cert, searched, seed);
    if let Some(path) = out {
        std::fs::write(path, report.to_json())
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }

    if json_to_stdout {
        print!("{}", report.to_json());
        return Ok(());
    }

    let style = Style::detect();
    let orbits = problem.group.orbits();
    let orbit_text: Vec<String> = orbits
        .blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    println!(
        "{} order {}, {}, {}",
        style.bold("group:"),
        problem.group.order(),
        problem.group.classify(),
        if orbits.is_transitive() { "transitive".to_string() } else { format!("orbits {}", orbit_text.join(" ")) }
    );
    println!(
        "{} {}[{}]/({}), degree {}, irreducibility {}",
        style.bold("field:"),
        problem.desc.base(),
        problem.desc.generator_name(),
        noname::exact::poly::scalar_poly_string(
            problem.desc.modulus().coeffs(),
            problem.desc.generator_name()
        ),
        problem.desc.degree(),
        report.field.irreducibility,
    );
    println!(
        "{} {} ({}) {}",
        style.bold("alpha:"),
        cert.alpha,
        if searched { format!("searched, seed {seed}") } else { "given".to_string() },
        style.ok("normal")
    );
    println!("{} {}", style.bold("construction:"), cert.construction_name());
    for line in render_certificate_text(&cert) {
        println!("{line}");
    }
    println!(
        "checks: invariance {}, round trip {}, determinant nonzero {}",
        style.ok("ok"),
        style.ok("ok"),
        style.ok("ok"),
    );
    println!(
        "elapsed: {} ms (build {build_ms} ms, alpha {alpha_ms} ms, certify {certify_ms} ms)",
        total.elapsed().as_millis()
    );
    Ok(())
}

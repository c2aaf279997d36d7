//! Shared construction pipeline: config -> field, group, presentation,
//! isomorphism, alpha.

use std::sync::Arc;

use noname::{
    close_group_from_matrices, find_normal, presentation_from_images, FieldDescriptor,
    FieldElement, GaloisPresentation, GroupFieldIso, MatrixGroup,
};

use crate::config::ProblemConfig;
use crate::CliError;

/// Ceiling for the randomized normal-element search.
const MAX_SEARCH_TRIES: u64 = 100_000;

pub struct BuiltProblem {
    pub desc: Arc<FieldDescriptor>,
    pub group: Arc<MatrixGroup>,
    pub presentation: Arc<GaloisPresentation>,
    pub iso: GroupFieldIso,
}

pub fn build_problem(config: &ProblemConfig) -> Result<BuiltProblem, CliError> {
    let desc = config.field_descriptor()?;
    let group = Arc::new(close_group_from_matrices(
        config.dimension(),
        &config.generator_matrices(),
        config.closure_cap,
    )?);
    let images = config.automorphism_images(&desc)?;
    let (presentation, iso) = presentation_from_images(&group, &desc, &images)?;
    Ok(BuiltProblem { desc, group, presentation, iso })
}

/// Picks alpha: the config element unless absent or a search is forced.
/// Returns the element and whether it was searched.
pub fn resolve_alpha(
    config: &ProblemConfig,
    problem: &BuiltProblem,
    seed: u64,
    force_search: bool,
) -> Result<(FieldElement, bool), CliError> {
    if !force_search {
        if let Some(alpha) = config.alpha_element(&problem.desc)? {
            return Ok((alpha, false));
        }
    }
    let alpha = find_normal(&problem.presentation, seed, MAX_SEARCH_TRIES)?;
    Ok((alpha, true))
}

//! Problem description files: JSON with integer coefficients as numbers
//! and rational coefficients as "p/q" strings.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use noname::exact::rat::parse_rat;
use noname::exact::{Base, Scalar, UniPoly};
use noname::{FieldDescriptor, FieldElement};

use crate::CliError;

/// `"rational"` or `{"prime": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseSpec {
    Rational,
    Prime(u64),
}

impl BaseSpec {
    pub fn to_base(self) -> Result<Base, CliError> {
        match self {
            BaseSpec::Rational => Ok(Base::Rational),
            BaseSpec::Prime(p) => Base::prime(p).map_err(CliError::from),
        }
    }

    pub fn from_base(base: Base) -> BaseSpec {
        match base {
            Base::Rational => BaseSpec::Rational,
            Base::Prime(p) => BaseSpec::Prime(p),
        }
    }
}

/// A coefficient: a JSON number or a "p/q" string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    Int(i64),
    Str(String),
}

impl CoeffSpec {
    pub fn to_scalar(&self, base: Base) -> Result<Scalar, CliError> {
        match self {
            CoeffSpec::Int(n) => Ok(Scalar::from_i64(*n, base)),
            CoeffSpec::Str(s) => {
                let r = parse_rat(s)
                    .map_err(|_| CliError::input(format!("bad coefficient literal {s:?}")))?;
                Scalar::from_rat(&r, base)
                    .map_err(|_| CliError::input(format!("coefficient {s:?} does not fit {base}")))
            }
        }
    }
}

pub fn scalars_from_specs(specs: &[CoeffSpec], base: Base) -> Result<Vec<Scalar>, CliError> {
    specs.iter().map(|c| c.to_scalar(base)).collect()
}

/// One group generator with the automorphism it is bound to.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub matrix: Vec<Vec<i64>>,
    /// Image of the field generator under the bound automorphism,
    /// ascending power-basis coordinates of length deg(modulus).
    pub automorphism_image: Vec<CoeffSpec>,
}

fn default_generator_name() -> String {
    "t".to_string()
}

fn default_seed() -> u64 {
    1
}

fn default_closure_cap() -> usize {
    20000
}

fn default_construction() -> String {
    "auto".to_string()
}

/// The on-disk problem description.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub base: BaseSpec,
    /// Ascending coefficients of the monic modulus m(t).
    pub modulus: Vec<CoeffSpec>,
    #[serde(default = "default_generator_name")]
    pub generator_name: String,
    /// Number of lattice variables; inferred from the generators when
    /// absent (needed explicitly only for a trivial group on n > 1).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    /// Power-basis coordinates of alpha; absent means search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<CoeffSpec>>,
    #[serde(default = "default_construction")]
    pub construction: String,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_closure_cap")]
    pub closure_cap: usize,
    #[serde(default)]
    pub trust_irreducible: bool,
}

impl ProblemConfig {
    pub fn load(path: &Path) -> Result<ProblemConfig, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let config: ProblemConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("bad config {}: {e}", path.display())))?;
        config.validate_shape()?;
        Ok(config)
    }

    /// Structural checks that belong to parsing: consistent matrix
    /// dimensions and coordinate vector lengths.
    fn validate_shape(&self) -> Result<(), CliError> {
        if self.modulus.len() < 2 {
            return Err(CliError::input("modulus needs degree >= 1".into()));
        }
        let degree = self.modulus.len() - 1;
        let n = self.dimension();
        if n == 0 {
            return Err(CliError::input("dimension must be at least 1".into()));
        }
        for (k, g) in self.generators.iter().enumerate() {
            if g.matrix.len() != n || g.matrix.iter().any(|row| row.len() != n) {
                return Err(CliError::input(format!(
                    "generator {k}: matrix dimensions are not consistently {n}x{n}"
                )));
            }
            if g.automorphism_image.len() != degree {
                return Err(CliError::input(format!(
                    "generator {k}: automorphism image has {} coordinates, expected {degree}",
                    g.automorphism_image.len()
                )));
            }
        }
        if let Some(alpha) = &self.alpha {
            if alpha.len() != degree {
                return Err(CliError::input(format!(
                    "alpha has {} coordinates, expected {degree}",
                    alpha.len()
                )));
            }
        }
        match self.construction.as_str() {
            "auto" | "permutation" | "signed" => Ok(()),
            other => Err(CliError::input(format!(
                "construction must be auto|permutation|signed, got {other:?}"
            ))),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
            .unwrap_or_else(|| self.generators.first().map_or(1, |g| g.matrix.len()))
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn field_descriptor(&self) -> Result<Arc<FieldDescriptor>, CliError> {
        let base = self.base.to_base()?;
        let coeffs = scalars_from_specs(&self.modulus, base)?;
        let modulus = UniPoly::from_coeffs(base, coeffs).map_err(CliError::from)?;
        FieldDescriptor::new(base, modulus, &self.generator_name, self.trust_irreducible)
            .map_err(CliError::from)
    }

    pub fn generator_matrices(&self) -> Vec<Vec<Vec<i64>>> {
        self.generators.iter().map(|g| g.matrix.clone()).collect()
    }

    pub fn automorphism_images(
        &self,
        desc: &Arc<FieldDescriptor>,
    ) -> Result<Vec<FieldElement>, CliError> {
        self.generators
            .iter()
            .map(|g| {
                let coords = scalars_from_specs(&g.automorphism_image, desc.base())?;
                FieldElement::from_coords(desc, coords).map_err(CliError::from)
            })
            .collect()
    }

    pub fn alpha_element(
        &self,
        desc: &Arc<FieldDescriptor>,
    ) -> Result<Option<FieldElement>, CliError> {
        match &self.alpha {
            None => Ok(None),
            Some(specs) => {
                let coords = scalars_from_specs(specs, desc.base())?;
                Ok(Some(FieldElement::from_coords(desc, coords).map_err(CliError::from)?))
            }
        }
    }

    pub fn construction(&self) -> noname::Construction {
        match self.construction.as_str() {
            "permutation" => noname::Construction::Permutation,
            "signed" => noname::Construction::Signed,
            _ => noname::Construction::Auto,
        }
    }
}

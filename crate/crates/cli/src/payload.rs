//! Input payload schemas: JSON (UTF-8), rationals as strings `"p/q"` so no
//! float ever enters the pipeline. Unknown fields are rejected. The full
//! grammar is documented in `docs/input-format.md`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use chiclass::geometry::{projective_ring, CompleteIntersection};
use chiclass::nearby::{LogPair, SncResolution, SncStratum};
use chiclass::oracles::{pieces, ScissorExpr};
use chiclass::rat::parse_rat;
use chiclass::singularity::{IsolatedSingularPoint, SpectrumData, Weights};
use chiclass::ypoly::YPoly;

use crate::CliError;

/// An ambient space: a single `P^n` or a product given by a factor list.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum AmbientSpec {
    Single(u32),
    Product(Vec<u32>),
}

impl AmbientSpec {
    pub fn factors(&self) -> Vec<u32> {
        match self {
            AmbientSpec::Single(n) => vec![*n],
            AmbientSpec::Product(v) => v.clone(),
        }
    }
}

/// A hypersurface degree: a plain degree or a multidegree vector.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum DegreeSpec {
    Single(u32),
    Multi(Vec<u32>),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CiPayload {
    pub ambient: AmbientSpec,
    #[serde(default)]
    pub degrees: Vec<DegreeSpec>,
}

impl CiPayload {
    pub fn to_ci(&self, max_dim: usize) -> Result<CompleteIntersection, CliError> {
        let factors = self.ambient.factors();
        let ring = projective_ring(&factors)
            .map_err(|e| CliError::input(format!("field 'ambient': {e}")))?;
        if ring.total_dim() > max_dim {
            return Err(CliError::input(format!(
                "field 'ambient': total dimension {} exceeds CHICLASS_MAX_DIM = {max_dim}",
                ring.total_dim()
            )));
        }
        let m = ring.num_factors();
        let multidegrees = self
            .degrees
            .iter()
            .map(|d| match d {
                DegreeSpec::Single(a) => {
                    if m == 1 {
                        Ok(vec![*a])
                    } else {
                        Err(CliError::input(
                            "field 'degrees': plain degrees need a single projective factor"
                                .to_string(),
                        ))
                    }
                }
                DegreeSpec::Multi(v) => Ok(v.clone()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        CompleteIntersection::new(ring, multidegrees)
            .map_err(|e| CliError::input(format!("field 'degrees': {e}")))
    }
}

/// A polynomial in `y`: an explicit ascending coefficient list, or a named
/// standard piece.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ChiSpec {
    Coeffs { coeffs: Vec<String> },
    Piece {
        piece: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

impl ChiSpec {
    pub fn to_poly(&self) -> Result<YPoly, CliError> {
        match self {
            ChiSpec::Coeffs { coeffs } => {
                let cs = coeffs
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::input(format!("field 'coeffs': {e}")))?;
                Ok(YPoly::from_coeffs(cs))
            }
            ChiSpec::Piece { piece, n } => {
                let dim = n.unwrap_or(0);
                match piece.as_str() {
                    "proj" => Ok(pieces::proj(dim)),
                    "affine" => Ok(pieces::affine(dim)),
                    "torus" => Ok(pieces::torus()),
                    "point" => Ok(pieces::point()),
                    other => Err(CliError::input(format!(
                        "field 'piece': unknown standard piece {other:?} \
                         (expected proj, affine, torus or point)"
                    ))),
                }
            }
        }
    }
}

/// Scissor-calculus expression tree.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "op", deny_unknown_fields, rename_all = "snake_case")]
pub enum ScissorSpec {
    Proj { n: usize },
    Affine { n: usize },
    Torus,
    Point,
    Union { of: Vec<ScissorSpec> },
    Complement { ambient: Box<ScissorSpec>, removed: Box<ScissorSpec> },
    Product { of: Vec<ScissorSpec> },
    BlowupPoints { of: Box<ScissorSpec>, count: usize },
    ContractCurve { of: Box<ScissorSpec> },
}

impl ScissorSpec {
    pub fn to_expr(&self) -> Result<ScissorExpr, CliError> {
        let err = |msg: &str| CliError::input(format!("field 'scissor': {msg}"));
        Ok(match self {
            ScissorSpec::Proj { n } => ScissorExpr::Proj(*n),
            ScissorSpec::Affine { n } => ScissorExpr::Affine(*n),
            ScissorSpec::Torus => ScissorExpr::Torus,
            ScissorSpec::Point => ScissorExpr::Point,
            ScissorSpec::Union { of } => {
                let mut parts = of.iter().map(|s| s.to_expr());
                let first = parts.next().ok_or_else(|| err("empty union"))??;
                parts.try_fold(first, |acc, p| Ok(ScissorExpr::union(acc, p?)))?
            }
            ScissorSpec::Complement { ambient, removed } => {
                ScissorExpr::complement(ambient.to_expr()?, removed.to_expr()?)
            }
            ScissorSpec::Product { of } => {
                let mut parts = of.iter().map(|s| s.to_expr());
                let first = parts.next().ok_or_else(|| err("empty product"))??;
                parts.try_fold(first, |acc, p| Ok(ScissorExpr::product(acc, p?)))?
            }
            ScissorSpec::BlowupPoints { of, count } => {
                ScissorExpr::blowup_points(of.to_expr()?, *count)
            }
            ScissorSpec::ContractCurve { of } => ScissorExpr::contract_curve(of.to_expr()?),
        })
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SingSpec {
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumSpec {
    /// Number of local variables.
    pub n: usize,
    /// Spectral numbers as a multiset (repeats allowed).
    pub entries: Vec<String>,
}

impl SingSpec {
    pub fn to_point(&self, index: usize) -> Result<IsolatedSingularPoint, CliError> {
        let label = self
            .label
            .clone()
            .unwrap_or_else(|| format!("singularity {index}"));
        match (&self.weights, &self.spectrum) {
            (Some(ws), None) => {
                let parsed = ws
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::input(format!("field 'weights': {e}")))?;
                let weights = Weights::new(parsed)
                    .map_err(|e| CliError::input(format!("field 'weights': {e}")))?;
                Ok(IsolatedSingularPoint::from_weights(label, weights))
            }
            (None, Some(sp)) => {
                let mut entries = BTreeMap::new();
                for s in &sp.entries {
                    let alpha = parse_rat(s)
                        .map_err(|e| CliError::input(format!("field 'spectrum.entries': {e}")))?;
                    *entries.entry(alpha).or_insert(0u64) += 1;
                }
                let spectrum = SpectrumData::new(entries, sp.n)
                    .map_err(|e| CliError::input(format!("field 'spectrum': {e}")))?;
                Ok(IsolatedSingularPoint::from_spectrum(label, spectrum))
            }
            _ => Err(CliError::input(format!(
                "field 'sings[{index}]': give exactly one of 'weights' or 'spectrum'"
            ))),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MilnorPayload {
    pub ambient: AmbientSpec,
    #[serde(default)]
    pub degrees: Vec<DegreeSpec>,
    pub sings: Vec<SingSpec>,
    /// Optional chi_y of the actual singular member; when present the
    /// degree-0 Milnor identity is verified against it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_y_of_x: Option<ChiOfXSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ChiOfXSpec {
    Scissor { scissor: ScissorSpec },
    Direct(ChiSpec),
}

impl ChiOfXSpec {
    pub fn to_poly(&self) -> Result<YPoly, CliError> {
        match self {
            ChiOfXSpec::Scissor { scissor } => {
                let expr = scissor.to_expr()?;
                chiclass::scissor_chi_y(&expr)
                    .map_err(|e| CliError::input(format!("field 'scissor': {e}")))
            }
            ChiOfXSpec::Direct(c) => c.to_poly(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumPayload {
    pub weights: Vec<String>,
}

impl SpectrumPayload {
    pub fn to_weights(&self) -> Result<Weights, CliError> {
        let parsed = self
            .weights
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::input(format!("field 'weights': {e}")))?;
        Weights::new(parsed).map_err(|e| CliError::input(format!("field 'weights': {e}")))
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", deny_unknown_fields, rename_all = "kebab-case")]
pub enum NearbyPayload {
    Resolution {
        components: Vec<ComponentSpec>,
        strata: Vec<StratumSpec>,
        sigma_chi: ChiSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma_cap_xprime_chi: Option<ChiSpec>,
    },
    LogPair {
        ambient: AmbientSpec,
        divisors: Vec<Vec<u32>>,
    },
    InclExcl {
        table: Vec<PieceSpec>,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    pub id: usize,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub components: Vec<usize>,
    pub over_sigma: bool,
    pub pieces: Vec<PieceSpec>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PieceSpec {
    /// Number of boundary components intersected (`|J|`; 0 is the
    /// compactification itself).
    pub removed: usize,
    pub chi: ChiSpec,
}

impl NearbyPayload {
    pub fn to_resolution(
        components: &[ComponentSpec],
        strata: &[StratumSpec],
        sigma_chi: &ChiSpec,
        sigma_cap: &Option<ChiSpec>,
    ) -> Result<SncResolution, CliError> {
        let comps = components
            .iter()
            .map(|c| (c.id, c.multiplicity))
            .collect::<Vec<_>>();
        let strata = strata
            .iter()
            .map(|s| {
                Ok(SncStratum {
                    components: s.components.iter().copied().collect(),
                    over_sigma: s.over_sigma,
                    cover_pieces: s
                        .pieces
                        .iter()
                        .map(|p| Ok((p.removed, p.chi.to_poly()?)))
                        .collect::<Result<Vec<_>, CliError>>()?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let sigma = sigma_chi.to_poly()?;
        let sigma_cap = match sigma_cap {
            Some(c) => c.to_poly()?,
            None => YPoly::zero(),
        };
        SncResolution::new(comps, strata, sigma, sigma_cap)
            .map_err(|e| CliError::input(format!("field 'strata': {e}")))
    }

    pub fn to_log_pair(
        ambient: &AmbientSpec,
        divisors: &[Vec<u32>],
        max_dim: usize,
    ) -> Result<LogPair, CliError> {
        let ring = projective_ring(&ambient.factors())
            .map_err(|e| CliError::input(format!("field 'ambient': {e}")))?;
        if ring.total_dim() > max_dim {
            return Err(CliError::input(format!(
                "field 'ambient': total dimension {} exceeds CHICLASS_MAX_DIM = {max_dim}",
                ring.total_dim()
            )));
        }
        LogPair::new(ring, divisors.to_vec())
            .map_err(|e| CliError::input(format!("field 'divisors': {e}")))
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyPayload {
    pub check: String,
    #[serde(default, alias = "nMax", skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(default, alias = "dMax", skip_serializing_if = "Option::is_none")]
    pub d_max: Option<u32>,
}

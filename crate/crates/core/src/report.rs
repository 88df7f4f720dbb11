//! JSON payloads. Rationals are written as `"p/q"` strings (`"p"` for
//! integers) and Gale rays as integer strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{format_rational, parse_rational, AffineHyperplane};
use crate::classify::{ClassificationResult, Witness};
use crate::gale::GaleDiagram;
use crate::labels::IndexSet;
use crate::om::{ConfigError, PointConfiguration};
use crate::splits::{Split, SplitComplexReport};
use crate::triangulation::{f_vector, is_foldable, is_regular, split_triangulation_check, Triangulation};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub vertices: Vec<Vec<String>>,
}

impl ConfigJson {
    pub fn from_config(config: &PointConfiguration) -> Self {
        Self {
            name: config.name().to_string(),
            dim: config.dim(),
            labels: config.labels().to_vec(),
            vertices: config
                .points()
                .iter()
                .map(|p| p.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_config(&self) -> Result<PointConfiguration, InputError> {
        let points = self
            .vertices
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| parse_rational(x).map_err(|_| InputError::Rational(x.clone())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PointConfiguration::new(
            self.name.clone(),
            self.dim,
            self.labels.clone(),
            points,
        )?)
    }
}

pub fn parse_config(text: &str) -> Result<PointConfiguration, InputError> {
    serde_json::from_str::<ConfigJson>(text)?.to_config()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaleJson {
    pub primal_dim: usize,
    pub labels: Vec<String>,
    pub rays: Vec<Vec<String>>,
}

impl GaleJson {
    pub fn from_diagram(g: &GaleDiagram) -> Self {
        Self {
            primal_dim: g.primal_dim(),
            labels: g.labels().to_vec(),
            rays: g.rays().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperplaneJson {
    pub normal: Vec<String>,
    pub offset: String,
}

impl HyperplaneJson {
    pub fn new(h: &AffineHyperplane) -> Self {
        Self {
            normal: h.normal().iter().map(ToString::to_string).collect(),
            offset: format_rational(h.offset()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitJson {
    pub hyperplane: HyperplaneJson,
    pub cocircuit: String,
    pub cells: [Vec<String>; 2],
}

impl SplitJson {
    pub fn new(config: &PointConfiguration, split: &Split) -> Self {
        Self {
            hyperplane: HyperplaneJson::new(split.hyperplane()),
            cocircuit: split.cocircuit().to_string(),
            cells: [config.labels_of(split.cell_plus()), config.labels_of(split.cell_minus())],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitsJson {
    pub labels: Vec<String>,
    pub circuits: Vec<String>,
    pub cocircuits: Vec<String>,
}

impl CircuitsJson {
    pub fn new(config: &PointConfiguration) -> Self {
        Self {
            labels: config.labels().to_vec(),
            circuits: config.circuits().iter().map(ToString::to_string).collect(),
            cocircuits: config.cocircuits().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakComplexJson {
    pub faces: Vec<Vec<usize>>,
    pub facets: Vec<Vec<usize>>,
    pub max_weak_card: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitComplexJson {
    pub splits: Vec<SplitJson>,
    pub split_complex: ComplexJson,
    pub weak_split_complex: WeakComplexJson,
}

impl SplitComplexJson {
    pub fn new(config: &PointConfiguration, report: &SplitComplexReport) -> Self {
        let to_vec = |s: &IndexSet| s.to_vec();
        Self {
            splits: report.splits.iter().map(|s| SplitJson::new(config, s)).collect(),
            split_complex: ComplexJson {
                vertices: (0..report.splits.len()).collect(),
                edges: report.compatibility_edges.iter().map(|&(i, j)| [i, j]).collect(),
            },
            weak_split_complex: WeakComplexJson {
                faces: report.weak_faces.iter().map(to_vec).collect(),
                facets: report.weak_facets().iter().map(to_vec).collect(),
                max_weak_card: report.max_weak_card,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangulationJson {
    pub cells: Vec<Vec<String>>,
    pub f_vector: Vec<usize>,
    pub regular: bool,
    pub split: bool,
    pub foldable: bool,
}

impl TriangulationJson {
    pub fn new(config: &PointConfiguration, t: &Triangulation, splits: &[Split]) -> Self {
        Self {
            cells: t.cell_labels(config),
            f_vector: f_vector(config, t),
            regular: is_regular(config, t),
            split: split_triangulation_check(config, t, splits).is_split(),
            foldable: is_foldable(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorJson {
    pub kind: Option<String>,
    pub labels: Vec<String>,
    pub bijection: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub apexes: Vec<String>,
    pub partition: Vec<Vec<String>>,
    pub rank_additive: bool,
    pub cross_part_splits_incompatible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessJson {
    MissingVertexSplit { label: String },
    GaleMultiplicity { labels: Vec<String> },
    Unrecognized { labels: Vec<String>, reason: String },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w.clone() {
            Witness::MissingVertexSplit { label } => WitnessJson::MissingVertexSplit { label },
            Witness::GaleMultiplicity { labels } => WitnessJson::GaleMultiplicity { labels },
            Witness::Unrecognized { labels, reason } => WitnessJson::Unrecognized { labels, reason },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationJson {
    pub name: String,
    pub verdict: String,
    pub factors: Vec<FactorJson>,
    pub certificate: CertificateJson,
    pub witness: Option<WitnessJson>,
    pub counterexample: Option<Vec<Vec<String>>>,
    pub brute_force: Option<bool>,
    pub structural: bool,
}

impl ClassificationJson {
    pub fn new(config: &PointConfiguration, r: &ClassificationResult) -> Self {
        Self {
            name: config.name().to_string(),
            verdict: r.verdict.to_string(),
            factors: r
                .factors
                .iter()
                .map(|f| FactorJson {
                    kind: f.kind.map(|k| k.to_string()),
                    labels: f.labels.clone(),
                    bijection: f.bijection.clone(),
                })
                .collect(),
            certificate: CertificateJson {
                apexes: r.certificate.apexes.clone(),
                partition: r.certificate.partition.clone(),
                rank_additive: r.certificate.rank_additive,
                cross_part_splits_incompatible: r.certificate.cross_part_splits_incompatible,
            },
            witness: r.witness.as_ref().map(WitnessJson::from),
            counterexample: r.counterexample.as_ref().map(|t| t.cell_labels(config)),
            brute_force: r.brute_force,
            structural: r.structural,
        }
    }
}

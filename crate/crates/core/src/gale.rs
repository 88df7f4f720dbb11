//! Gale duals as exact integer rays.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{primitive_integer_vector, Rational, RationalMatrix};
use crate::labels::IndexSet;
use crate::om::{vector_circuits, vector_cocircuits, PointConfiguration, SignVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaleError {
    #[error("ray of {0:?} is zero; delete the apex in the primal instead")]
    ZeroRay(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("diagram has zero rays: {0:?}")]
    ImproperDiagram(Vec<String>),
}

/// Rows of a kernel basis of the homogenized vertex matrix, each scaled to a
/// primitive integer vector. Zero rows mark pyramid apexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaleDiagram {
    labels: Vec<String>,
    rays: Vec<Vec<BigInt>>,
    primal_dim: usize,
}

pub fn gale_dual(config: &PointConfiguration) -> GaleDiagram {
    let kernel = config.homogenized_matrix().kernel_basis();
    let rays = (0..kernel.rows())
        .map(|r| primitive_integer_vector(kernel.row(r)))
        .collect();
    GaleDiagram {
        labels: config.labels().to_vec(),
        rays,
        primal_dim: config.dim(),
    }
}

impl GaleDiagram {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[BigInt] {
        &self.rays[i]
    }

    pub fn primal_dim(&self) -> usize {
        self.primal_dim
    }

    /// Dimension of the space the rays live in, `n - d - 1`.
    pub fn dual_dim(&self) -> usize {
        self.labels.len() - self.primal_dim - 1
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, GaleError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| GaleError::UnknownLabel(label.to_string()))
    }

    pub fn is_zero_ray(&self, i: usize) -> bool {
        self.rays[i].iter().all(Zero::is_zero)
    }

    pub fn zero_rays(&self) -> IndexSet {
        (0..self.len()).filter(|&i| self.is_zero_ray(i)).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.zero_rays().is_empty()
    }

    pub fn rational_rays(&self) -> Vec<Vec<Rational>> {
        self.rays
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect()
    }

    /// Canonical cocircuits of the ray configuration; these are the circuits
    /// of the primal.
    pub fn cocircuits(&self) -> Vec<SignVector> {
        vector_cocircuits(&self.rational_rays())
    }

    /// Canonical circuits of the ray configuration; these are the cocircuits
    /// of the primal.
    pub fn circuits(&self) -> Vec<SignVector> {
        vector_circuits(&self.rational_rays())
    }

    pub fn structure_profile(&self) -> StructureProfile {
        let mut classes: BTreeMap<&[BigInt], Vec<usize>> = BTreeMap::new();
        for (i, r) in self.rays.iter().enumerate() {
            if !self.is_zero_ray(i) {
                classes.entry(r.as_slice()).or_default().push(i);
            }
        }
        let mut double_point_classes: Vec<Vec<usize>> = classes.values().cloned().collect();
        double_point_classes.sort();
        let mut siblings = BTreeMap::new();
        for class in &double_point_classes {
            for &i in class {
                let others: Vec<usize> = class.iter().copied().filter(|&j| j != i).collect();
                if !others.is_empty() {
                    siblings.insert(i, others);
                }
            }
        }
        let mut antipodal_pairs = Vec::new();
        for i in 0..self.len() {
            if self.is_zero_ray(i) {
                continue;
            }
            for j in i + 1..self.len() {
                if self.rays[i].iter().zip(&self.rays[j]).all(|(a, b)| *a == -b) {
                    antipodal_pairs.push((i, j));
                }
            }
        }
        let max_multiplicity = double_point_classes.iter().map(Vec::len).max().unwrap_or(0);
        StructureProfile {
            proper: self.is_proper(),
            zero_rays: self.zero_rays().to_vec(),
            double_point_classes,
            antipodal_pairs,
            siblings,
            max_multiplicity,
        }
    }

    /// Diagram of the deletion `conv(V \ {label})`: the remaining rays taken
    /// modulo the contracted ray.
    pub fn contract(&self, label: &str) -> Result<GaleDiagram, GaleError> {
        let l = self.index_of(label)?;
        if self.is_zero_ray(l) {
            return Err(GaleError::ZeroRay(label.to_string()));
        }
        let r: Vec<Rational> = self.rational_rays()[l].clone();
        let complement = RationalMatrix::from_rows(r.len(), &[r]).nullspace();
        let mut labels = Vec::new();
        let mut rays = Vec::new();
        for (i, ray) in self.rays.iter().enumerate() {
            if i == l {
                continue;
            }
            let projected: Vec<Rational> = complement
                .iter()
                .map(|b| {
                    b.iter()
                        .zip(ray)
                        .fold(Rational::zero(), |acc, (x, y)| acc + x * Rational::from_integer(y.clone()))
                })
                .collect();
            labels.push(self.labels[i].clone());
            rays.push(primitive_integer_vector(&projected));
        }
        Ok(GaleDiagram {
            labels,
            rays,
            primal_dim: self.primal_dim,
        })
    }

    /// The diagram without its zero rays; the Gale dual of the primal with its
    /// apexes removed.
    pub fn without_zero_rays(&self) -> GaleDiagram {
        let zero = self.zero_rays();
        let keep: Vec<usize> = (0..self.len()).filter(|&i| !zero.contains(i)).collect();
        GaleDiagram {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            rays: keep.iter().map(|&i| self.rays[i].clone()).collect(),
            primal_dim: self.primal_dim - zero.len(),
        }
    }

    /// Whether every nonzero ray has its negation in the diagram.
    pub fn is_antipodal(&self) -> bool {
        (0..self.len()).all(|i| {
            !self.is_zero_ray(i)
                && self.rays.iter().any(|r| {
                    r.iter().zip(&self.rays[i]).all(|(a, b)| *a == -b)
                })
        })
    }
}

/// Multiplicity and antipodality data of a Gale diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureProfile {
    pub proper: bool,
    pub zero_rays: Vec<usize>,
    /// Classes of equal nonzero rays, singletons included.
    pub double_point_classes: Vec<Vec<usize>>,
    pub antipodal_pairs: Vec<(usize, usize)>,
    pub siblings: BTreeMap<usize, Vec<usize>>,
    pub max_multiplicity: usize,
}

impl StructureProfile {
    pub fn double_points(&self) -> Vec<&Vec<usize>> {
        self.double_point_classes.iter().filter(|c| c.len() >= 2).collect()
    }

    /// Unordered pairs of ray classes that are negatives of each other.
    pub fn antipodal_class_pairs(&self) -> usize {
        let class_of = |i: usize| {
            self.double_point_classes
                .iter()
                .position(|c| c.contains(&i))
                .expect("nonzero ray has a class")
        };
        let mut pairs: Vec<(usize, usize)> = self
            .antipodal_pairs
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (class_of(i), class_of(j));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort();
        pairs.dedup();
        pairs.len()
    }
}

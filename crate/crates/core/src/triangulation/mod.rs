//! Triangulations without new vertices and their analysis.

pub mod cut;
pub mod enumerate;
pub mod placing;
pub mod regular;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use petgraph::algo::is_bipartite_undirected;
use petgraph::graph::UnGraph;
use thiserror::Error;

use crate::arith::{hyperplane_through, AffineHyperplane, Rational, RationalMatrix};
use crate::labels::{subsets_within, IndexSet};
use crate::om::PointConfiguration;
use crate::splits::Split;

pub use cut::{cut_complex, CutCell, PolyhedralComplexCells};
pub use enumerate::{enumerate_triangulations, EnumerationBudget};
pub use placing::placing_triangulation;
pub use regular::{is_regular, regular_heights};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("order must be a permutation of the labels")]
    DegenerateOrder,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid triangulation: {0}")]
    Invalid(String),
}

/// Full-dimensional simplices given by vertex index sets, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    cells: Vec<IndexSet>,
}

impl Triangulation {
    pub fn new(mut cells: Vec<IndexSet>) -> Self {
        cells.sort();
        cells.dedup();
        Self { cells }
    }

    pub fn from_labels<S: AsRef<str>>(
        config: &PointConfiguration,
        cells: &[Vec<S>],
    ) -> Result<Self, TriangulationError> {
        let cells = cells
            .iter()
            .map(|c| {
                config
                    .index_set(c)
                    .map_err(|e| TriangulationError::UnknownLabel(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(cells))
    }

    pub fn cells(&self) -> &[IndexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_labels(&self, config: &PointConfiguration) -> Vec<Vec<String>> {
        self.cells.iter().map(|&c| config.labels_of(c)).collect()
    }

    /// Codimension-one faces with the cells containing them.
    pub fn walls(&self) -> BTreeMap<IndexSet, Vec<usize>> {
        let mut walls: BTreeMap<IndexSet, Vec<usize>> = BTreeMap::new();
        for (i, &cell) in self.cells.iter().enumerate() {
            for v in cell.iter() {
                walls.entry(cell.without(v)).or_default().push(i);
            }
        }
        walls
    }
}

/// `|det| / d!` of the homogenized vertices of a full-dimensional simplex.
pub fn simplex_volume(config: &PointConfiguration, cell: IndexSet) -> Rational {
    let rows: Vec<Vec<Rational>> = cell.iter().map(|i| crate::arith::homogenize(config.point(i))).collect();
    let det = RationalMatrix::from_rows(config.dim() + 1, &rows).determinant();
    let factorial: u64 = (1..=config.dim() as u64).product();
    det.abs() / Rational::from_integer(factorial.into())
}

pub fn volume(config: &PointConfiguration) -> Rational {
    let t = placing_triangulation(config, &(0..config.len()).collect::<Vec<_>>())
        .expect("identity order is a permutation");
    t.cells().iter().map(|&c| simplex_volume(config, c)).sum()
}

/// Whether `conv a ∩ conv b = conv (a ∩ b)`: no circuit has its positive part
/// in one simplex and its negative part in the other.
pub fn intersect_properly(config: &PointConfiguration, a: IndexSet, b: IndexSet) -> bool {
    !config.circuits().iter().any(|c| {
        (c.plus().is_subset(a) && c.minus().is_subset(b))
            || (c.minus().is_subset(a) && c.plus().is_subset(b))
    })
}

/// Checks cell sizes, independence, exact volume and pairwise intersections.
pub fn validate(config: &PointConfiguration, t: &Triangulation) -> Result<(), TriangulationError> {
    let full = config.dim() + 1;
    for &c in t.cells() {
        if c.len() != full || !c.is_subset(config.all()) || config.affine_rank_of(c) != full {
            return Err(TriangulationError::Invalid(format!(
                "cell {:?} is not a full-dimensional simplex",
                config.labels_of(c)
            )));
        }
    }
    let total: Rational = t.cells().iter().map(|&c| simplex_volume(config, c)).sum();
    if total != volume(config) {
        return Err(TriangulationError::Invalid("cell volumes do not sum to the volume".into()));
    }
    for (i, &a) in t.cells().iter().enumerate() {
        for &b in &t.cells()[i + 1..] {
            if !intersect_properly(config, a, b) {
                return Err(TriangulationError::Invalid(format!(
                    "cells {:?} and {:?} overlap",
                    config.labels_of(a),
                    config.labels_of(b)
                )));
            }
        }
    }
    Ok(())
}

/// Walls with vertices of `P` strictly on both sides of their hyperplane.
pub fn interior_walls(config: &PointConfiguration, t: &Triangulation) -> Vec<(IndexSet, AffineHyperplane)> {
    t.walls()
        .into_keys()
        .filter_map(|w| {
            let h = hyperplane_through(&config.point_refs(w)).ok()?;
            let signs = config.signs_against(&h);
            (!signs.plus().is_empty() && !signs.minus().is_empty()).then_some((w, h))
        })
        .collect()
}

/// Face counts `f_0, .., f_d` of the simplicial complex.
pub fn f_vector(config: &PointConfiguration, t: &Triangulation) -> Vec<usize> {
    let d = config.dim();
    let mut faces: Vec<BTreeSet<IndexSet>> = vec![BTreeSet::new(); d + 1];
    for &cell in t.cells() {
        for (k, level) in faces.iter_mut().enumerate() {
            level.extend(subsets_within(cell, k + 1));
        }
    }
    faces.iter().map(BTreeSet::len).collect()
}

/// Cells adjacent across a shared wall.
pub fn dual_graph(t: &Triangulation) -> UnGraph<IndexSet, ()> {
    let mut graph = UnGraph::new_undirected();
    let nodes: Vec<_> = t.cells().iter().map(|&c| graph.add_node(c)).collect();
    for cells in t.walls().values() {
        if let [a, b] = cells.as_slice() {
            graph.add_edge(nodes[*a], nodes[*b], ());
        }
    }
    graph
}

pub fn is_foldable(t: &Triangulation) -> bool {
    let graph = dual_graph(t);
    match graph.node_indices().next() {
        None => true,
        Some(start) => is_bipartite_undirected(&graph, start),
    }
}

/// Whether the dual graph is a path through all cells.
pub fn dual_graph_is_path(t: &Triangulation) -> bool {
    let graph = dual_graph(t);
    let n = graph.node_count();
    if n == 1 {
        return true;
    }
    let degrees: Vec<usize> = graph.node_indices().map(|v| graph.neighbors(v).count()).collect();
    graph.edge_count() == n - 1
        && petgraph::algo::connected_components(&graph) == 1
        && degrees.iter().all(|&d| d <= 2)
}

/// Outcome of the two-stage split-inducedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTriangulationCheck {
    /// Every interior wall spans a split hyperplane.
    pub walls_on_splits: bool,
    /// Cutting by the occurring split hyperplanes reproduces the cells.
    pub cut_matches: bool,
    /// Indices into the split list of the hyperplanes that occur.
    pub used_splits: Vec<usize>,
    /// Stage two passed while stage one failed.
    pub inconsistent: bool,
}

impl SplitTriangulationCheck {
    pub fn is_split(&self) -> bool {
        self.walls_on_splits && self.cut_matches
    }
}

pub fn split_triangulation_check(
    config: &PointConfiguration,
    t: &Triangulation,
    splits: &[Split],
) -> SplitTriangulationCheck {
    let mut used = BTreeSet::new();
    let mut walls_on_splits = true;
    for (_, h) in interior_walls(config, t) {
        match splits.iter().position(|s| *s.hyperplane() == h) {
            Some(i) => {
                used.insert(i);
            }
            None => walls_on_splits = false,
        }
    }
    let used_splits: Vec<usize> = used.into_iter().collect();
    let hyperplanes: Vec<AffineHyperplane> =
        used_splits.iter().map(|&i| splits[i].hyperplane().clone()).collect();
    let cut = cut_complex(config, &hyperplanes);
    let cut_matches = match cut.cell_vertex_sets(config) {
        Some(mut cells) => {
            cells.sort();
            cells == t.cells()
        }
        None => false,
    };
    SplitTriangulationCheck {
        walls_on_splits,
        cut_matches,
        inconsistent: cut_matches && !walls_on_splits,
        used_splits,
    }
}

pub fn is_split_triangulation(config: &PointConfiguration, t: &Triangulation, splits: &[Split]) -> bool {
    split_triangulation_check(config, t, splits).is_split()
}

/// Brute-force total splittability over enumerated triangulations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceVerdict {
    /// Every regular triangulation is split.
    pub answer: bool,
    /// First regular triangulation that is not split.
    pub witness: Option<Triangulation>,
    /// Every triangulation, regular or not, is split.
    pub all_triangulations_answer: bool,
    pub all_witness: Option<Triangulation>,
    pub triangulations: usize,
    pub regular_triangulations: usize,
    pub inconsistent: bool,
}

pub fn is_totally_splittable_bruteforce(
    config: &PointConfiguration,
    budget: EnumerationBudget,
) -> Result<BruteForceVerdict, TriangulationError> {
    let splits = crate::splits::enumerate_splits(config);
    let all = enumerate_triangulations(config, false, budget)?;
    let mut verdict = BruteForceVerdict {
        answer: true,
        witness: None,
        all_triangulations_answer: true,
        all_witness: None,
        triangulations: all.len(),
        regular_triangulations: 0,
        inconsistent: false,
    };
    for t in all {
        let check = split_triangulation_check(config, &t, splits);
        verdict.inconsistent |= check.inconsistent;
        let regular = is_regular(config, &t);
        if regular {
            verdict.regular_triangulations += 1;
        }
        if !check.is_split() {
            if verdict.all_witness.is_none() {
                verdict.all_witness = Some(t.clone());
                verdict.all_triangulations_answer = false;
            }
            if regular && verdict.witness.is_none() {
                verdict.witness = Some(t);
                verdict.answer = false;
            }
        }
    }
    Ok(verdict)
}

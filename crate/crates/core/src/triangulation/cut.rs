//! Subdivisions of a polytope cut out by hyperplanes.

use crate::arith::{AffineHyperplane, Rational, RationalMatrix, Sign};
use crate::labels::IndexSet;
use crate::om::PointConfiguration;

/// A cell of the cut complex: its vertices and the closed halfspaces
/// `{x : side(x) ∈ {0, sign}}` bounding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCell {
    pub vertices: Vec<Vec<Rational>>,
    pub halfspaces: Vec<(AffineHyperplane, Sign)>,
}

impl CutCell {
    fn tight(&self, x: &[Rational]) -> Vec<usize> {
        self.halfspaces
            .iter()
            .enumerate()
            .filter(|(_, (h, _))| h.contains(x))
            .map(|(i, _)| i)
            .collect()
    }

    /// Pairs of vertices joined by an edge: the constraints tight at both have
    /// rank `d - 1`.
    fn edges(&self, dim: usize) -> Vec<(usize, usize)> {
        let tight: Vec<Vec<usize>> = self.vertices.iter().map(|v| self.tight(v)).collect();
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: Vec<Vec<Rational>> = tight[i]
                    .iter()
                    .filter(|k| tight[j].contains(k))
                    .map(|&k| self.halfspaces[k].0.rational_normal())
                    .collect();
                if RationalMatrix::from_rows(dim, &common).rank() == dim - 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn split(&self, dim: usize, h: &AffineHyperplane) -> Option<(CutCell, CutCell)> {
        let values: Vec<Rational> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let has = |s: Sign| values.iter().any(|v| Sign::of(v) == s);
        if !has(Sign::Plus) || !has(Sign::Minus) {
            return None;
        }
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (v, value) in self.vertices.iter().zip(&values) {
            match Sign::of(value) {
                Sign::Plus => plus.push(v.clone()),
                Sign::Minus => minus.push(v.clone()),
                Sign::Zero => {
                    plus.push(v.clone());
                    minus.push(v.clone());
                }
            }
        }
        for (i, j) in self.edges(dim) {
            let (a, b) = (&values[i], &values[j]);
            if Sign::of(a) == Sign::Zero || Sign::of(a) == Sign::of(b) || Sign::of(b) == Sign::Zero {
                continue;
            }
            let t = a / (a - b);
            let x: Vec<Rational> = self.vertices[i]
                .iter()
                .zip(&self.vertices[j])
                .map(|(u, w)| u + &t * (w - u))
                .collect();
            if !plus.contains(&x) {
                plus.push(x.clone());
            }
            if !minus.contains(&x) {
                minus.push(x);
            }
        }
        let mut halfspaces_plus = self.halfspaces.clone();
        halfspaces_plus.push((h.clone(), Sign::Plus));
        let mut halfspaces_minus = self.halfspaces.clone();
        halfspaces_minus.push((h.clone(), Sign::Minus));
        Some((
            CutCell {
                vertices: plus,
                halfspaces: halfspaces_plus,
            },
            CutCell {
                vertices: minus,
                halfspaces: halfspaces_minus,
            },
        ))
    }
}

/// The cells of `P` cut by a family of hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralComplexCells {
    pub cells: Vec<CutCell>,
}

impl PolyhedralComplexCells {
    pub fn cells(&self) -> &[CutCell] {
        &self.cells
    }

    /// Cell vertices that are not vertices of `config`, without repetition.
    pub fn new_points(&self, config: &PointConfiguration) -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for cell in &self.cells {
            for v in &cell.vertices {
                if !config.points().contains(v) && !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn all_vertices_original(&self, config: &PointConfiguration) -> bool {
        self.new_points(config).is_empty()
    }

    /// Vertex index sets of the cells, if no cell has a new vertex.
    pub fn cell_vertex_sets(&self, config: &PointConfiguration) -> Option<Vec<IndexSet>> {
        self.cells
            .iter()
            .map(|cell| {
                cell.vertices
                    .iter()
                    .map(|v| config.points().iter().position(|p| p == v))
                    .collect::<Option<IndexSet>>()
            })
            .collect()
    }
}

/// Cuts `P` successively by each hyperplane. Every cell that a hyperplane
/// meets in its interior is replaced by its two halves, whose vertices are
/// the old vertices on each closed side and the crossing points on edges.
pub fn cut_complex(config: &PointConfiguration, hyperplanes: &[AffineHyperplane]) -> PolyhedralComplexCells {
    let dim = config.dim();
    let mut cells = vec![CutCell {
        vertices: config.points().to_vec(),
        halfspaces: config
            .facets()
            .iter()
            .map(|f| (f.hyperplane.clone(), f.inner_side))
            .collect(),
    }];
    for h in hyperplanes {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            match cell.split(dim, h) {
                Some((a, b)) => {
                    next.push(a);
                    next.push(b);
                }
                None => next.push(cell),
            }
        }
        cells = next;
    }
    PolyhedralComplexCells { cells }
}

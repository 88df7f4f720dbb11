//! Enumeration of all triangulations without new vertices.
//!
//! Every triangulation has exactly one cell containing a fixed generic
//! interior point. Starting from each such seed, the search repeatedly takes
//! the smallest interior wall covered by only one chosen cell and branches
//! over the simplices completing it on the other side, so each triangulation
//! is produced exactly once.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed};

use super::placing::affine_coordinates;
use super::{intersect_properly, is_regular, simplex_volume, volume, Triangulation, TriangulationError};
use crate::arith::{hyperplane_through, int, Rational, Sign};
use crate::labels::{subsets_of_size, IndexSet};
use crate::om::{PointConfiguration, SignVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_n: usize,
    pub max_dim: usize,
    pub max_triangulations: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_n: 10,
            max_dim: 4,
            max_triangulations: 100_000,
        }
    }
}

impl EnumerationBudget {
    pub fn admits(&self, config: &PointConfiguration) -> bool {
        config.len() <= self.max_n && config.dim() <= self.max_dim
    }
}

struct Search<'a> {
    config: &'a PointConfiguration,
    simplices: Vec<IndexSet>,
    index: HashMap<IndexSet, usize>,
    /// `compatible[i]` lists, as a bitmask over simplex indices, the simplices
    /// meeting simplex `i` properly.
    compatible: Vec<Vec<u64>>,
    /// Vertex signs against each spanned wall hyperplane; `None` for walls on
    /// the boundary.
    walls: HashMap<IndexSet, Option<SignVector>>,
    found: BTreeSet<Triangulation>,
    limit: usize,
    exceeded: bool,
}

impl Search<'_> {
    fn is_compatible(&self, a: usize, b: usize) -> bool {
        self.compatible[a][b / 64] >> (b % 64) & 1 == 1
    }

    fn wall_signs(&mut self, wall: IndexSet) -> Option<SignVector> {
        let config = self.config;
        *self.walls.entry(wall).or_insert_with(|| {
            let h = hyperplane_through(&config.point_refs(wall)).ok()?;
            let signs = config.signs_against(&h);
            (!signs.plus().is_empty() && !signs.minus().is_empty()).then_some(signs)
        })
    }

    fn open_wall(&mut self, chosen: &[usize]) -> Option<(IndexSet, usize)> {
        let mut counts: HashMap<IndexSet, (usize, usize)> = HashMap::new();
        for &c in chosen {
            let cell = self.simplices[c];
            for v in cell.iter() {
                let e = counts.entry(cell.without(v)).or_insert((0, c));
                e.0 += 1;
            }
        }
        let mut open: Vec<(IndexSet, usize)> = counts
            .into_iter()
            .filter(|(_, (count, _))| *count == 1)
            .map(|(w, (_, c))| (w, c))
            .collect();
        open.sort();
        open.into_iter().find(|&(w, _)| self.wall_signs(w).is_some())
    }

    fn extend(&mut self, chosen: &mut Vec<usize>) {
        if self.exceeded {
            return;
        }
        let Some((wall, owner)) = self.open_wall(chosen) else {
            let t = Triangulation::new(chosen.iter().map(|&c| self.simplices[c]).collect());
            self.found.insert(t);
            if self.found.len() > self.limit {
                self.exceeded = true;
            }
            return;
        };
        let signs = self.wall_signs(wall).expect("open walls are interior");
        let inside = self.simplices[owner].difference(wall).first().expect("wall misses one vertex");
        let far = signs.sign(inside).negate();
        for v in 0..self.config.len() {
            if signs.sign(v) != far {
                continue;
            }
            let Some(&candidate) = self.index.get(&wall.with(v)) else {
                continue;
            };
            if chosen.iter().all(|&c| self.is_compatible(c, candidate)) {
                chosen.push(candidate);
                self.extend(chosen);
                chosen.pop();
            }
        }
    }
}

/// A point with distinct positive barycentric weights that lies on no
/// hyperplane spanned by vertices.
fn generic_interior_point(config: &PointConfiguration) -> Vec<Rational> {
    let d = config.dim();
    let hyperplanes: Vec<_> = subsets_of_size(config.len(), d)
        .filter_map(|s| hyperplane_through(&config.point_refs(s)).ok())
        .collect();
    for base in 2i64.. {
        let weights: Vec<Rational> = (0..config.len())
            .scan(Rational::one(), |w, _| {
                let current = w.clone();
                *w *= int(base);
                Some(current)
            })
            .collect();
        let total: Rational = weights.iter().sum();
        let q: Vec<Rational> = (0..d)
            .map(|c| {
                config
                    .points()
                    .iter()
                    .zip(&weights)
                    .map(|(p, w)| &p[c] * w)
                    .sum::<Rational>()
                    / &total
            })
            .collect();
        if hyperplanes.iter().all(|h| h.side(&q) != Sign::Zero) {
            return q;
        }
    }
    unreachable!("only finitely many bases put the point on a hyperplane")
}

/// All triangulations, sorted; with `regular_only` only the regular ones.
pub fn enumerate_triangulations(
    config: &PointConfiguration,
    regular_only: bool,
    budget: EnumerationBudget,
) -> Result<Vec<Triangulation>, TriangulationError> {
    if !budget.admits(config) {
        return Err(TriangulationError::BudgetExceeded(format!(
            "n = {}, d = {} exceeds max_n = {}, max_dim = {}",
            config.len(),
            config.dim(),
            budget.max_n,
            budget.max_dim
        )));
    }
    let full = config.dim() + 1;
    let simplices: Vec<IndexSet> = subsets_of_size(config.len(), full)
        .filter(|&s| config.affine_rank_of(s) == full)
        .collect();
    let index = simplices.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let words = simplices.len().div_ceil(64);
    let mut compatible = vec![vec![0u64; words]; simplices.len()];
    for i in 0..simplices.len() {
        for j in i..simplices.len() {
            if i != j && intersect_properly(config, simplices[i], simplices[j]) {
                compatible[i][j / 64] |= 1 << (j % 64);
                compatible[j][i / 64] |= 1 << (i % 64);
            }
        }
    }

    let q = generic_interior_point(config);
    let seeds: Vec<usize> = (0..simplices.len())
        .filter(|&i| {
            affine_coordinates(config, simplices[i], &q)
                .is_some_and(|coords| coords.iter().all(Signed::is_positive))
        })
        .collect();

    let mut search = Search {
        config,
        simplices,
        index,
        compatible,
        walls: HashMap::new(),
        found: BTreeSet::new(),
        limit: budget.max_triangulations,
        exceeded: false,
    };
    for seed in seeds {
        search.extend(&mut vec![seed]);
    }
    if search.exceeded {
        return Err(TriangulationError::BudgetExceeded(format!(
            "more than {} triangulations",
            budget.max_triangulations
        )));
    }

    let total = volume(config);
    let mut out = Vec::new();
    for t in search.found {
        let sum: Rational = t.cells().iter().map(|&c| simplex_volume(config, c)).sum();
        if sum != total {
            return Err(TriangulationError::Invalid(format!(
                "enumerated cells cover volume {sum} of {total}"
            )));
        }
        if !regular_only || is_regular(config, &t) {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::triangulation::{dual_graph_is_path, f_vector, placing_triangulation, validate};

    /// Oracle: every set of `k` full-rank simplices, for the known cell count
    /// `k`, that passes validation.
    fn bruteforce_count(config: &PointConfiguration, k: usize) -> usize {
        let full = config.dim() + 1;
        let simplices: Vec<IndexSet> = subsets_of_size(config.len(), full)
            .filter(|&s| config.affine_rank_of(s) == full)
            .collect();
        subsets_of_size(simplices.len(), k)
            .filter(|choice| {
                let t = Triangulation::new(choice.iter().map(|i| simplices[i]).collect());
                validate(config, &t).is_ok()
            })
            .count()
    }

    #[test]
    fn pentagon_has_five_triangulations() {
        let p = family::pentagon();
        let all = enumerate_triangulations(&p, false, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all.len(), bruteforce_count(&p, 3));
        assert_eq!(enumerate_triangulations(&p, true, EnumerationBudget::default()).unwrap().len(), 5);
        for t in &all {
            assert_eq!(f_vector(&p, t), vec![5, 7, 3]);
        }
    }

    #[test]
    fn hexagon_has_catalan_many() {
        let h = family::polygon(6).unwrap();
        assert_eq!(enumerate_triangulations(&h, false, EnumerationBudget::default()).unwrap().len(), 14);
    }

    #[test]
    fn octahedron_has_three_triangulations() {
        let o = family::crosspolytope(3).unwrap();
        let all = enumerate_triangulations(&o, false, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all.len(), bruteforce_count(&o, 4));
        assert!(all.iter().all(|t| t.len() == 4));
    }

    #[test]
    fn prism_has_six_path_triangulations() {
        let p = family::simplex_prism(3).unwrap();
        let all = enumerate_triangulations(&p, true, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all.len(), bruteforce_count(&p, 3));
        assert!(all.iter().all(|t| t.len() == 3 && dual_graph_is_path(t)));
    }

    #[test]
    fn enumerated_triangulations_are_valid_and_contain_placing() {
        let c = family::cube(3).unwrap();
        let all = enumerate_triangulations(&c, false, EnumerationBudget::default()).unwrap();
        assert_eq!(all.len(), 74);
        for t in &all {
            validate(&c, t).unwrap();
        }
        let placing = placing_triangulation(&c, &[5, 2, 7, 0, 1, 3, 6, 4]).unwrap();
        assert!(all.contains(&placing));
    }

    #[test]
    fn budget_is_enforced() {
        let c = family::cube(3).unwrap();
        let tight = EnumerationBudget {
            max_triangulations: 10,
            ..EnumerationBudget::default()
        };
        assert!(matches!(
            enumerate_triangulations(&c, false, tight),
            Err(TriangulationError::BudgetExceeded(_))
        ));
        let small = EnumerationBudget {
            max_n: 5,
            ..EnumerationBudget::default()
        };
        assert!(enumerate_triangulations(&c, false, small).is_err());
    }
}

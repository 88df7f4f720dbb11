//! Splits, their compatibility relations, and the split complexes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::fm::{self, Constraint, Relation};
use crate::arith::{primitive_integer_vector, AffineHyperplane, Rational, Sign};
use crate::gale::GaleDiagram;
use crate::labels::{subsets_of_size, IndexSet};
use crate::om::{PointConfiguration, SignVector};
use crate::triangulation::cut::cut_complex;

pub const DEFAULT_MAX_SPLITS: usize = 20;
pub const DEFAULT_MAX_WEAK_CARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("hyperplane {0} does not define a split")]
    NotASplit(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("Gale diagram has zero rays at {0:?}")]
    ImproperDiagram(Vec<String>),
    #[error("{found} splits exceed the limit of {limit}")]
    BudgetExceeded { found: usize, limit: usize },
    #[error("compatibility tests disagree for {0} and {1}")]
    Inconsistent(String, String),
}

/// A split: a hyperplane spanned by vertices that cuts no edge and has
/// vertices strictly on both sides. Signs and cells are taken against the
/// canonical hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    hyperplane: AffineHyperplane,
    cocircuit: SignVector,
    cell_plus: IndexSet,
    cell_minus: IndexSet,
}

impl Split {
    fn from_hyperplane(config: &PointConfiguration, hyperplane: AffineHyperplane) -> Self {
        let cocircuit = config.signs_against(&hyperplane);
        let zero = cocircuit.zero_set();
        Self {
            hyperplane,
            cocircuit,
            cell_plus: zero.union(cocircuit.plus()),
            cell_minus: zero.union(cocircuit.minus()),
        }
    }

    pub fn hyperplane(&self) -> &AffineHyperplane {
        &self.hyperplane
    }

    /// Signs of the vertices against the canonical hyperplane.
    pub fn cocircuit(&self) -> &SignVector {
        &self.cocircuit
    }

    pub fn cell_plus(&self) -> IndexSet {
        self.cell_plus
    }

    pub fn cell_minus(&self) -> IndexSet {
        self.cell_minus
    }

    /// Vertices on the split hyperplane.
    pub fn zero_set(&self) -> IndexSet {
        self.cocircuit.zero_set()
    }

    /// The vertex separated from all others, if this is a vertex split.
    pub fn isolated_vertex(&self) -> Option<usize> {
        [self.cocircuit.plus(), self.cocircuit.minus()]
            .into_iter()
            .find(|side| side.len() == 1)
            .and_then(IndexSet::first)
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.hyperplane, self.cocircuit)
    }
}

fn cuts_an_edge(config: &PointConfiguration, signs: &SignVector) -> bool {
    config.edges().iter().any(|&(a, b)| {
        let (sa, sb) = (signs.sign(a), signs.sign(b));
        (sa == Sign::Plus && sb == Sign::Minus) || (sa == Sign::Minus && sb == Sign::Plus)
    })
}

/// All splits, ordered by canonical cocircuit.
pub fn enumerate_splits(config: &PointConfiguration) -> &[Split] {
    config.split_cache().get_or_init(|| {
        let full = config.dim() + 1;
        config
            .cocircuits()
            .iter()
            .filter(|c| !c.plus().is_empty() && !c.minus().is_empty())
            .filter(|c| !cuts_an_edge(config, c))
            .map(|c| Split::from_hyperplane(config, config.cocircuit_hyperplane(c)))
            .inspect(|s| {
                debug_assert_eq!(config.affine_rank_of(s.cell_plus), full);
                debug_assert_eq!(config.affine_rank_of(s.cell_minus), full);
            })
            .collect()
    })
}

fn ensure_split(config: &PointConfiguration, split: &Split) -> Result<usize, SplitError> {
    enumerate_splits(config)
        .iter()
        .position(|s| s == split)
        .ok_or_else(|| SplitError::NotASplit(split.hyperplane.to_string()))
}

/// The split through all neighbors of `label` that separates it from every
/// other vertex, if one exists.
pub fn vertex_split(config: &PointConfiguration, label: &str) -> Result<Option<Split>, SplitError> {
    let v = config
        .index_of(label)
        .map_err(|_| SplitError::UnknownLabel(label.to_string()))?;
    Ok(vertex_split_at(config, v))
}

pub fn vertex_split_at(config: &PointConfiguration, v: usize) -> Option<Split> {
    let neighbors = config.neighbors(v);
    let hyperplane = crate::arith::hyperplane_through(&config.point_refs(neighbors)).ok()?;
    let split = Split::from_hyperplane(config, hyperplane);
    let own_side = match split.cocircuit.sign(v) {
        Sign::Plus => split.cocircuit.plus(),
        Sign::Minus => split.cocircuit.minus(),
        Sign::Zero => return None,
    };
    if own_side.len() != 1 {
        return None;
    }
    enumerate_splits(config).iter().find(|s| **s == split).cloned()
}

/// Combinatorial interior-intersection test. Points of `H1 ∩ H2 ∩ P` come
/// from common vertices and from vectors with positive part on `H1` and
/// negative part on `H2`; they reach the interior iff the vertices involved
/// lie in no common facet.
fn meets_interior_combinatorially(config: &PointConfiguration, a: &Split, b: &Split) -> bool {
    let (z1, z2) = (a.zero_set(), b.zero_set());
    let mut used = z1.intersection(z2);
    for c in config.circuits() {
        let forward = c.plus().is_subset(z1) && c.minus().is_subset(z2);
        let backward = c.minus().is_subset(z1) && c.plus().is_subset(z2);
        if forward || backward {
            used = used.union(c.support());
        }
    }
    !used.is_empty() && !config.facets().iter().any(|f| used.is_subset(f.vertices))
}

fn hyperplane_constraint(h: &AffineHyperplane, side: Sign, relation: Relation) -> Constraint {
    let sign = match side {
        Sign::Minus => -Rational::from_integer(1.into()),
        _ => Rational::from_integer(1.into()),
    };
    let coeffs = h.rational_normal().into_iter().map(|c| c * &sign).collect();
    Constraint::new(coeffs, -(h.offset() * &sign), relation)
}

/// Exact strict feasibility of `x ∈ H1 ∩ H2 ∩ int P`.
fn meets_interior_geometrically(config: &PointConfiguration, a: &Split, b: &Split) -> bool {
    let mut system = vec![
        hyperplane_constraint(&a.hyperplane, Sign::Plus, Relation::Eq),
        hyperplane_constraint(&b.hyperplane, Sign::Plus, Relation::Eq),
    ];
    for f in config.facets() {
        system.push(hyperplane_constraint(&f.hyperplane, f.inner_side, Relation::Gt));
    }
    fm::feasible(config.dim(), &system)
}

/// Whether the two split hyperplanes avoid a common interior point. Both the
/// vector criterion and Fourier-Motzkin feasibility are evaluated; they must
/// agree.
pub fn compatible(config: &PointConfiguration, a: &Split, b: &Split) -> Result<bool, SplitError> {
    ensure_split(config, a)?;
    ensure_split(config, b)?;
    let combinatorial = meets_interior_combinatorially(config, a, b);
    let geometric = meets_interior_geometrically(config, a, b);
    if combinatorial != geometric {
        return Err(SplitError::Inconsistent(a.to_string(), b.to_string()));
    }
    Ok(!combinatorial)
}

/// Whether the splits admit a common refinement without new vertices.
pub fn weakly_compatible(config: &PointConfiguration, splits: &[Split]) -> Result<bool, SplitError> {
    for s in splits {
        ensure_split(config, s)?;
    }
    let hyperplanes: Vec<AffineHyperplane> = splits.iter().map(|s| s.hyperplane.clone()).collect();
    Ok(cut_complex(config, &hyperplanes).all_vertices_original(config))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexOptions {
    pub max_splits: usize,
    pub max_weak_card: usize,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        Self {
            max_splits: DEFAULT_MAX_SPLITS,
            max_weak_card: DEFAULT_MAX_WEAK_CARD,
        }
    }
}

/// Splits with their compatibility graph (the split complex is its flag
/// complex) and the faces of the weak split complex up to a cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitComplexReport {
    pub splits: Vec<Split>,
    pub compatibility_edges: Vec<(usize, usize)>,
    pub weak_faces: Vec<IndexSet>,
    pub max_weak_card: usize,
}

impl SplitComplexReport {
    pub fn is_compatible(&self, i: usize, j: usize) -> bool {
        self.compatibility_edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_weak_face(&self, set: IndexSet) -> bool {
        set.is_empty() || self.weak_faces.contains(&set)
    }

    /// Inclusion-maximal weak faces.
    pub fn weak_facets(&self) -> Vec<IndexSet> {
        self.weak_faces
            .iter()
            .copied()
            .filter(|f| !self.weak_faces.iter().any(|g| g != f && f.is_subset(*g)))
            .collect()
    }
}

pub fn split_complexes(
    config: &PointConfiguration,
    options: ComplexOptions,
) -> Result<SplitComplexReport, SplitError> {
    let splits = enumerate_splits(config).to_vec();
    if splits.len() > options.max_splits {
        return Err(SplitError::BudgetExceeded {
            found: splits.len(),
            limit: options.max_splits,
        });
    }
    let mut compatibility_edges = Vec::new();
    for i in 0..splits.len() {
        for j in i + 1..splits.len() {
            if compatible(config, &splits[i], &splits[j])? {
                compatibility_edges.push((i, j));
            }
        }
    }

    // Weak compatibility is closed under subsets, so faces grow one split at a time.
    let mut weak_faces = Vec::new();
    let mut level: BTreeSet<IndexSet> = if options.max_weak_card == 0 {
        BTreeSet::new()
    } else {
        (0..splits.len()).map(IndexSet::singleton).collect()
    };
    let mut size = 1;
    while !level.is_empty() {
        weak_faces.extend(level.iter().copied());
        if size == options.max_weak_card {
            break;
        }
        let mut next = BTreeSet::new();
        for face in &level {
            let top = face.iter().last().expect("faces are nonempty");
            for j in top + 1..splits.len() {
                let candidate = face.with(j);
                if !candidate.iter().all(|i| level.contains(&candidate.without(i))) {
                    continue;
                }
                let chosen: Vec<Split> = candidate.iter().map(|i| splits[i].clone()).collect();
                if weakly_compatible(config, &chosen)? {
                    next.insert(candidate);
                }
            }
        }
        level = next;
        size += 1;
    }
    Ok(SplitComplexReport {
        splits,
        compatibility_edges,
        weak_faces,
        max_weak_card: options.max_weak_card,
    })
}

/// Independent sets of rays whose open positive cone contains `x`, up to
/// `limit` of them.
fn carriers(rays: &[Vec<Rational>], width: usize, x: &[Rational], limit: usize) -> usize {
    let mut count = 0;
    for k in 1..=width.min(rays.len()) {
        for b in subsets_of_size(rays.len(), k) {
            let columns: Vec<Vec<Rational>> = b.iter().map(|i| rays[i].clone()).collect();
            let m = crate::arith::RationalMatrix::from_rows(width, &columns).transpose();
            let positive = crate::arith::solve_linear(&m, x)
                .unique()
                .is_some_and(|c| c.iter().all(|v| Sign::of(v) == Sign::Plus));
            if positive {
                count += 1;
                if count >= limit {
                    return count;
                }
            }
        }
    }
    count
}

/// Split detection on the dual side. A circuit `C` with both parts nonempty
/// meets in a ray `x`; it gives a split when `C+` and `C-` are the only
/// independent ray sets with `x` in their open cone.
pub fn splits_via_gale(g: &GaleDiagram) -> Result<Vec<SignVector>, SplitError> {
    if g.dual_dim() == 0 {
        return Ok(Vec::new());
    }
    if !g.is_proper() {
        let zero = g.zero_rays().iter().map(|i| g.labels()[i].clone()).collect();
        return Err(SplitError::ImproperDiagram(zero));
    }
    let rays = g.rational_rays();
    let width = g.dual_dim();
    let mut by_ray: BTreeMap<Vec<BigInt>, Vec<SignVector>> = BTreeMap::new();
    for c in g.circuits() {
        if c.plus().is_empty() || c.minus().is_empty() {
            continue;
        }
        // The unique dependence on supp C, restricted to C+, spans the meeting ray.
        let members = c.support().to_vec();
        let columns: Vec<Vec<Rational>> = members.iter().map(|&i| rays[i].clone()).collect();
        let kernel = crate::arith::RationalMatrix::from_rows(width, &columns)
            .transpose()
            .nullspace();
        let coeffs = &kernel[0];
        let mut point = vec![Rational::from_integer(0.into()); width];
        for (&i, lambda) in members.iter().zip(coeffs) {
            if c.plus().contains(i) {
                let lambda = if Sign::of(lambda) == Sign::Minus { -lambda.clone() } else { lambda.clone() };
                for (x, r) in point.iter_mut().zip(&rays[i]) {
                    *x += &lambda * r;
                }
            }
        }
        by_ray.entry(primitive_integer_vector(&point)).or_default().push(c);
    }
    let mut out = Vec::new();
    for (ray, cs) in by_ray {
        if cs.len() != 1 {
            continue;
        }
        let x: Vec<Rational> = ray.into_iter().map(Rational::from_integer).collect();
        if carriers(&rays, width, &x, 3) == 2 {
            out.push(cs[0]);
        }
    }
    out.sort();
    Ok(out)
}

/// Pairs of vertices that both admit vertex splits.
pub fn vertex_split_pairs(config: &PointConfiguration) -> Vec<(usize, usize, Split, Split)> {
    let splits: Vec<Option<Split>> = (0..config.len()).map(|v| vertex_split_at(config, v)).collect();
    let mut out = Vec::new();
    for pair in subsets_of_size(config.len(), 2) {
        let v = pair.to_vec();
        if let (Some(a), Some(b)) = (&splits[v[0]], &splits[v[1]]) {
            out.push((v[0], v[1], a.clone(), b.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{hyperplane_through, int};
    use crate::family;
    use crate::gale::gale_dual;

    fn canonical_set(splits: &[Split]) -> BTreeSet<SignVector> {
        splits.iter().map(|s| s.cocircuit().canonical()).collect()
    }

    /// Oracle: every hyperplane through d affinely independent vertices, kept
    /// if it has vertices strictly on both sides and cuts no edge. Edges come
    /// from the separation-free pair test on the hull of each pair.
    fn split_oracle(config: &PointConfiguration) -> BTreeSet<SignVector> {
        let mut out = BTreeSet::new();
        for subset in subsets_of_size(config.len(), config.dim()) {
            let Ok(h) = hyperplane_through(&config.point_refs(subset)) else {
                continue;
            };
            let signs = config.signs_against(&h);
            if signs.plus().is_empty() || signs.minus().is_empty() {
                continue;
            }
            if !cuts_an_edge(config, &signs) {
                out.insert(signs.canonical());
            }
        }
        out
    }

    #[test]
    fn octahedron_has_three_coordinate_splits() {
        let o = family::crosspolytope(3).unwrap();
        let splits = enumerate_splits(&o);
        assert_eq!(splits.len(), 3);
        for s in splits {
            assert_eq!(*s.hyperplane().offset(), int(0));
            assert_eq!(s.hyperplane().normal().iter().filter(|x| **x != BigInt::from(0)).count(), 1);
        }
    }

    #[test]
    fn pentagon_has_five_splits() {
        let p = family::pentagon();
        assert_eq!(enumerate_splits(&p).len(), 5);
        assert_eq!(canonical_set(enumerate_splits(&p)), split_oracle(&p));
    }

    #[test]
    fn fully_perturbed_octahedron_has_no_splits() {
        for seed in 0..4 {
            assert!(enumerate_splits(&family::perturbed_octahedron(seed).unwrap()).is_empty());
        }
        // Moving a single vertex keeps the plane x = 0 intact.
        assert_eq!(enumerate_splits(&family::single_perturbed_octahedron()).len(), 1);
    }

    #[test]
    fn split_enumeration_matches_oracle() {
        for c in [
            family::cube(3).unwrap(),
            family::simplex_prism(3).unwrap(),
            family::prism_plus_point(),
            family::polygon(7).unwrap(),
        ] {
            assert_eq!(canonical_set(enumerate_splits(&c)), split_oracle(&c), "{}", c.name());
        }
    }

    #[test]
    fn split_cells_partition_labels() {
        let c = family::cube(3).unwrap();
        for s in enumerate_splits(&c) {
            assert_eq!(s.cell_plus().union(s.cell_minus()), c.all());
            assert_eq!(s.cell_plus().intersection(s.cell_minus()), s.zero_set());
        }
    }

    #[test]
    fn cube_vertex_split() {
        let c = family::cube(3).unwrap();
        let s = vertex_split(&c, "000").unwrap().unwrap();
        assert_eq!(s.hyperplane().normal(), &[BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(*s.hyperplane().offset(), int(1));
        let expected = c.index_set(&["000", "001", "010", "100"]).unwrap();
        assert_eq!(s.cell_minus(), expected);
    }

    #[test]
    fn prism_vertex_split_is_coordinate_plane() {
        let p = family::simplex_prism(3).unwrap();
        let s = vertex_split(&p, "e1").unwrap().unwrap();
        assert_eq!(s.hyperplane().normal(), &[BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
        assert_eq!(*s.hyperplane().offset(), int(0));
    }

    #[test]
    fn pentagon_vertex_split_matches_cocircuit() {
        let p = family::pentagon();
        let s = vertex_split(&p, "2").unwrap().unwrap();
        assert_eq!(s.cocircuit().to_string(), "0+0--");
        assert!(matches!(vertex_split(&p, "x"), Err(SplitError::UnknownLabel(_))));
    }

    #[test]
    fn octahedron_antipodes_share_vertex_splits() {
        let o = family::crosspolytope(3).unwrap();
        for i in 0..3 {
            let a = vertex_split_at(&o, 2 * i).unwrap();
            let b = vertex_split_at(&o, 2 * i + 1).unwrap();
            assert_eq!(a, b);
            assert_eq!(*a.hyperplane().offset(), int(0));
        }
    }

    #[test]
    fn pyramid_apex_has_no_vertex_split() {
        let pyr = family::pyramid(&family::polygon(4).unwrap()).unwrap();
        assert!(vertex_split(&pyr, "apex").unwrap().is_none());
        assert!(vertex_split(&pyr, "1").unwrap().is_some());
    }

    #[test]
    fn compatibility_examples() {
        let o = family::crosspolytope(3).unwrap();
        let s = enumerate_splits(&o);
        assert!(!compatible(&o, &s[0], &s[1]).unwrap());
        assert!(!compatible(&o, &s[0], &s[0]).unwrap());

        let p = family::pentagon();
        let d13 = Split::from_hyperplane(&p, hyperplane_through(&p.point_refs(p.index_set(&["1", "3"]).unwrap())).unwrap());
        let d14 = Split::from_hyperplane(&p, hyperplane_through(&p.point_refs(p.index_set(&["1", "4"]).unwrap())).unwrap());
        let d24 = Split::from_hyperplane(&p, hyperplane_through(&p.point_refs(p.index_set(&["2", "4"]).unwrap())).unwrap());
        assert!(compatible(&p, &d13, &d14).unwrap());
        assert!(!compatible(&p, &d13, &d24).unwrap());
    }

    #[test]
    fn rejects_foreign_splits() {
        let p = family::pentagon();
        let edge = Split::from_hyperplane(&p, hyperplane_through(&p.point_refs(p.index_set(&["1", "2"]).unwrap())).unwrap());
        let s = enumerate_splits(&p)[0].clone();
        assert!(matches!(compatible(&p, &edge, &s), Err(SplitError::NotASplit(_))));
    }

    #[test]
    fn octahedron_weak_complex_is_triangle_boundary() {
        let o = family::crosspolytope(3).unwrap();
        let report = split_complexes(&o, ComplexOptions::default()).unwrap();
        assert!(report.compatibility_edges.is_empty());
        let expected: Vec<IndexSet> = vec![
            IndexSet::from_iter([0]),
            IndexSet::from_iter([1]),
            IndexSet::from_iter([2]),
            IndexSet::from_iter([0, 1]),
            IndexSet::from_iter([0, 2]),
            IndexSet::from_iter([1, 2]),
        ];
        assert_eq!(report.weak_faces, expected);
        let s = enumerate_splits(&o);
        assert!(!weakly_compatible(&o, s).unwrap());
        assert!(weakly_compatible(&o, &s[..1]).unwrap());
    }

    #[test]
    fn pentagon_compatibility_graph_is_a_five_cycle() {
        let p = family::pentagon();
        let report = split_complexes(&p, ComplexOptions::default()).unwrap();
        assert_eq!(report.compatibility_edges.len(), 5);
        for i in 0..5 {
            let degree = report
                .compatibility_edges
                .iter()
                .filter(|&&(a, b)| a == i || b == i)
                .count();
            assert_eq!(degree, 2);
        }
    }

    #[test]
    fn simplex_has_empty_report() {
        let report = split_complexes(&family::simplex(3).unwrap(), ComplexOptions::default()).unwrap();
        assert!(report.splits.is_empty());
        assert!(report.weak_faces.is_empty());
    }

    #[test]
    fn split_budget() {
        let err = split_complexes(
            &family::cube(3).unwrap(),
            ComplexOptions {
                max_splits: 4,
                max_weak_card: 2,
            },
        );
        assert_eq!(err, Err(SplitError::BudgetExceeded { found: 14, limit: 4 }));
    }

    #[test]
    fn gale_side_detects_the_same_splits() {
        let p = family::pentagon();
        let via_gale = splits_via_gale(&gale_dual(&p)).unwrap();
        assert!(via_gale.contains(&SignVector::parse("0+0--").unwrap().canonical()));
        assert_eq!(via_gale.into_iter().collect::<BTreeSet<_>>(), canonical_set(enumerate_splits(&p)));

        let o = family::crosspolytope(3).unwrap();
        assert_eq!(splits_via_gale(&gale_dual(&o)).unwrap().len(), 3);

        assert!(splits_via_gale(&gale_dual(&family::simplex(3).unwrap())).unwrap().is_empty());
        let pyr = family::pyramid(&family::polygon(4).unwrap()).unwrap();
        assert!(matches!(
            splits_via_gale(&gale_dual(&pyr)),
            Err(SplitError::ImproperDiagram(_))
        ));
    }

    #[test]
    fn a_unique_circuit_alone_is_not_enough() {
        // Three circuits of this Gale diagram meet in rays no other circuit
        // reaches, yet their hyperplanes cut the edge f1 f2.
        for c in [family::prism_plus_point(), family::cube(3).unwrap(), family::polygon(7).unwrap()] {
            let via_gale: BTreeSet<SignVector> = splits_via_gale(&gale_dual(&c)).unwrap().into_iter().collect();
            assert_eq!(via_gale, split_oracle(&c), "{}", c.name());
        }
    }
}

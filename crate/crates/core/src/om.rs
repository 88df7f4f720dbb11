//! Point configurations and their oriented matroids.
//!
//! A [`PointConfiguration`] holds the vertices of a full-dimensional polytope.
//! Its oriented matroid is read off the homogenized vectors `(1, p)`:
//! cocircuits are the sign patterns of linear hyperplanes spanned by those
//! vectors, circuits the sign patterns of minimal affine dependences.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{
    affine_rank, dot, homogenize, hyperplane_through, AffineHyperplane, Rational, RationalMatrix,
    Sign,
};
use crate::labels::{subsets_of_size, IndexSet, MAX_POINTS};
use crate::splits::Split;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("{labels} labels for {points} points")]
    LabelCountMismatch { labels: usize, points: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("point {label:?} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        label: String,
        found: usize,
        expected: usize,
    },
    #[error("{points} points cannot span dimension {dim}")]
    TooFewPoints { points: usize, dim: usize },
    #[error("at most {MAX_POINTS} points are supported, got {0}")]
    TooManyPoints(usize),
    #[error("configuration is not full-dimensional (affine rank {rank}, dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("point {0:?} is not a vertex of the convex hull")]
    NotAVertex(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
}

/// A sign vector over the points of a configuration, stored as two disjoint
/// index masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    plus: IndexSet,
    minus: IndexSet,
    len: usize,
}

impl SignVector {
    pub fn new(len: usize, plus: IndexSet, minus: IndexSet) -> Self {
        assert!(plus.is_disjoint(minus), "positive and negative parts overlap");
        assert!(plus.union(minus).is_subset(IndexSet::full(len)));
        Self { plus, minus, len }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut plus = IndexSet::EMPTY;
        let mut minus = IndexSet::EMPTY;
        for (i, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => plus.insert(i),
                Sign::Minus => minus.insert(i),
                Sign::Zero => {}
            }
        }
        Self::new(signs.len(), plus, minus)
    }

    /// Parses the compact `"0+0--"` notation.
    pub fn parse(text: &str) -> Option<Self> {
        let signs: Option<Vec<Sign>> = text
            .chars()
            .map(|c| match c {
                '+' => Some(Sign::Plus),
                '-' => Some(Sign::Minus),
                '0' => Some(Sign::Zero),
                _ => None,
            })
            .collect();
        signs.map(|s| Self::from_signs(&s))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn plus(&self) -> IndexSet {
        self.plus
    }

    pub fn minus(&self) -> IndexSet {
        self.minus
    }

    pub fn support(&self) -> IndexSet {
        self.plus.union(self.minus)
    }

    pub fn zero_set(&self) -> IndexSet {
        IndexSet::full(self.len).difference(self.support())
    }

    pub fn sign(&self, i: usize) -> Sign {
        if self.plus.contains(i) {
            Sign::Plus
        } else if self.minus.contains(i) {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            plus: self.minus,
            minus: self.plus,
            len: self.len,
        }
    }

    /// Representative of `{X, -X}` whose smallest support element is positive.
    pub fn canonical(&self) -> Self {
        match self.support().first() {
            Some(i) if self.minus.contains(i) => self.negate(),
            _ => *self,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// `|X+| = |X-|`.
    pub fn is_balanced(&self) -> bool {
        self.plus.len() == self.minus.len()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.sign(i).symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

fn rank_of(vectors: &[Vec<Rational>], subset: IndexSet, width: usize) -> usize {
    let rows: Vec<Vec<Rational>> = subset.iter().map(|i| vectors[i].clone()).collect();
    RationalMatrix::from_rows(width, &rows).rank()
}

/// Canonical circuits of a vector configuration, sorted.
pub(crate) fn vector_circuits(vectors: &[Vec<Rational>]) -> Vec<SignVector> {
    let n = vectors.len();
    let Some(width) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let rank = RationalMatrix::from_rows(width, vectors).rank();
    let mut found: Vec<SignVector> = Vec::new();
    for size in 1..=(rank + 1).min(n) {
        for subset in subsets_of_size(n, size) {
            if found.iter().any(|c| c.support().is_subset(subset)) {
                continue;
            }
            if rank_of(vectors, subset, width) != size - 1 {
                continue;
            }
            let members = subset.to_vec();
            let columns: Vec<Vec<Rational>> = members.iter().map(|&i| vectors[i].clone()).collect();
            let kernel = RationalMatrix::from_rows(width, &columns).transpose().nullspace();
            debug_assert_eq!(kernel.len(), 1);
            let coeffs = &kernel[0];
            if coeffs.iter().any(Zero::is_zero) {
                continue;
            }
            let mut signs = vec![Sign::Zero; n];
            for (&i, c) in members.iter().zip(coeffs) {
                signs[i] = Sign::of(c);
            }
            found.push(SignVector::from_signs(&signs).canonical());
        }
    }
    found.sort();
    found
}

/// Canonical cocircuits of a spanning vector configuration, sorted.
pub(crate) fn vector_cocircuits(vectors: &[Vec<Rational>]) -> Vec<SignVector> {
    let n = vectors.len();
    let Some(width) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let rank = RationalMatrix::from_rows(width, vectors).rank();
    if rank == 0 {
        return Vec::new();
    }
    assert_eq!(rank, width, "cocircuits need a spanning configuration");
    let mut zero_sets: Vec<IndexSet> = Vec::new();
    let mut found = BTreeSet::new();
    for subset in subsets_of_size(n, rank - 1) {
        if zero_sets.iter().any(|z| subset.is_subset(*z)) {
            continue;
        }
        if rank_of(vectors, subset, width) != rank - 1 {
            continue;
        }
        let rows: Vec<Vec<Rational>> = subset.iter().map(|i| vectors[i].clone()).collect();
        let kernel = RationalMatrix::from_rows(width, &rows).nullspace();
        debug_assert_eq!(kernel.len(), 1);
        let signs: Vec<Sign> = vectors.iter().map(|v| Sign::of(&dot(&kernel[0], v))).collect();
        let cocircuit = SignVector::from_signs(&signs).canonical();
        zero_sets.push(cocircuit.zero_set());
        found.insert(cocircuit);
    }
    found.into_iter().collect()
}

/// A facet: its hyperplane, incident vertices, and the side the rest of the
/// polytope lies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub hyperplane: AffineHyperplane,
    pub vertices: IndexSet,
    pub inner_side: Sign,
}

impl Facet {
    /// Whether `x` satisfies the facet inequality (weakly).
    pub fn admits(&self, x: &[Rational]) -> bool {
        let s = self.hyperplane.side(x);
        s == Sign::Zero || s == self.inner_side
    }
}

#[derive(Default, Clone)]
struct Cache {
    circuits: OnceLock<Vec<SignVector>>,
    cocircuits: OnceLock<Vec<SignVector>>,
    facets: OnceLock<Vec<Facet>>,
    edges: OnceLock<Vec<(usize, usize)>>,
    splits: OnceLock<Vec<Split>>,
}

/// Labeled vertices of a full-dimensional polytope in `Q^d`.
#[derive(Clone)]
pub struct PointConfiguration {
    name: String,
    labels: Vec<String>,
    points: Vec<Vec<Rational>>,
    dim: usize,
    cache: Cache,
}

impl fmt::Debug for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointConfiguration")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish()
    }
}

impl PartialEq for PointConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.dim == other.dim
            && self.labels == other.labels
            && self.points == other.points
    }
}

impl PointConfiguration {
    /// Validates and builds a configuration: labels distinct, points
    /// full-dimensional, every point a vertex.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        labels: Vec<String>,
        points: Vec<Vec<Rational>>,
    ) -> Result<Self, ConfigError> {
        if labels.len() != points.len() {
            return Err(ConfigError::LabelCountMismatch {
                labels: labels.len(),
                points: points.len(),
            });
        }
        if points.len() > MAX_POINTS {
            return Err(ConfigError::TooManyPoints(points.len()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ConfigError::DuplicateLabel(l.clone()));
            }
        }
        for (l, p) in labels.iter().zip(&points) {
            if p.len() != dim {
                return Err(ConfigError::DimensionMismatch {
                    label: l.clone(),
                    found: p.len(),
                    expected: dim,
                });
            }
        }
        if points.len() < dim + 1 {
            return Err(ConfigError::TooFewPoints {
                points: points.len(),
                dim,
            });
        }
        let refs: Vec<&[Rational]> = points.iter().map(Vec::as_slice).collect();
        let rank = affine_rank(&refs);
        if rank != dim + 1 {
            return Err(ConfigError::NotFullDimensional {
                rank: rank.saturating_sub(1),
                dim,
            });
        }
        let config = Self {
            name: name.into(),
            labels,
            points,
            dim,
            cache: Cache::default(),
        };
        // A point inside the hull of others yields a circuit with a single
        // element on one side.
        for c in config.circuits() {
            for side in [c.plus(), c.minus()] {
                if side.len() == 1 {
                    let i = side.first().unwrap();
                    return Err(ConfigError::NotAVertex(config.labels[i].clone()));
                }
            }
        }
        Ok(config)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Rational] {
        &self.points[i]
    }

    pub fn all(&self) -> IndexSet {
        IndexSet::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Result<usize, ConfigError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ConfigError::UnknownLabel(label.to_string()))
    }

    pub fn index_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<IndexSet, ConfigError> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn labels_of(&self, set: IndexSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn homogenized(&self) -> Vec<Vec<Rational>> {
        self.points.iter().map(|p| homogenize(p)).collect()
    }

    /// The `n x (d+1)` matrix of homogenized vertices.
    pub fn homogenized_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.dim + 1, &self.homogenized())
    }

    pub fn point_refs(&self, set: IndexSet) -> Vec<&[Rational]> {
        set.iter().map(|i| self.points[i].as_slice()).collect()
    }

    pub fn affine_rank_of(&self, set: IndexSet) -> usize {
        affine_rank(&self.point_refs(set))
    }

    /// Canonical circuits (minimal affine dependences), sorted.
    pub fn circuits(&self) -> &[SignVector] {
        self.cache
            .circuits
            .get_or_init(|| vector_circuits(&self.homogenized()))
    }

    /// Canonical cocircuits (spanned hyperplanes), sorted.
    pub fn cocircuits(&self) -> &[SignVector] {
        self.cache
            .cocircuits
            .get_or_init(|| vector_cocircuits(&self.homogenized()))
    }

    /// Face test by the circuit criterion: `F` is the vertex set of a face iff
    /// no circuit has one side inside `F` and the other side not.
    pub fn is_face(&self, set: IndexSet) -> bool {
        self.circuits().iter().all(|c| {
            (!c.plus().is_subset(set) || c.minus().is_subset(set))
                && (!c.minus().is_subset(set) || c.plus().is_subset(set))
        })
    }

    pub fn is_face_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<bool, ConfigError> {
        Ok(self.is_face(self.index_set(labels)?))
    }

    /// Edges of the vertex-edge graph as sorted index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        self.cache.edges.get_or_init(|| {
            let n = self.len();
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if self.is_face(IndexSet::from_iter([i, j])) {
                        out.push((i, j));
                    }
                }
            }
            out
        })
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges().binary_search(&key).is_ok()
    }

    pub fn neighbors(&self, i: usize) -> IndexSet {
        self.edges()
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Facets, from the cocircuits with an empty side.
    pub fn facets(&self) -> &[Facet] {
        self.cache.facets.get_or_init(|| {
            if self.dim == 0 {
                return Vec::new();
            }
            self.cocircuits()
                .iter()
                .filter(|c| c.plus().is_empty() || c.minus().is_empty())
                .map(|c| {
                    let vertices = c.zero_set();
                    let hyperplane = hyperplane_through(&self.point_refs(vertices))
                        .expect("cocircuit zero sets span hyperplanes");
                    let off = c.support().first().expect("facet misses a vertex");
                    Facet {
                        inner_side: hyperplane.side(&self.points[off]),
                        hyperplane,
                        vertices,
                    }
                })
                .collect()
        })
    }

    /// The hyperplane spanned by the zero set of a cocircuit.
    pub fn cocircuit_hyperplane(&self, cocircuit: &SignVector) -> AffineHyperplane {
        hyperplane_through(&self.point_refs(cocircuit.zero_set()))
            .expect("cocircuit zero sets span hyperplanes")
    }

    /// Signs of all points against a hyperplane.
    pub fn signs_against(&self, h: &AffineHyperplane) -> SignVector {
        let signs: Vec<Sign> = self.points.iter().map(|p| h.side(p)).collect();
        SignVector::from_signs(&signs)
    }

    /// The sub-configuration on `set`, re-coordinatized in its own affine hull
    /// by projecting onto a set of coordinates that is injective there.
    pub fn restrict(&self, set: IndexSet) -> Result<Self, ConfigError> {
        let members = set.to_vec();
        let Some(&base) = members.first() else {
            return Err(ConfigError::TooFewPoints { points: 0, dim: 0 });
        };
        let directions: Vec<Vec<Rational>> = members
            .iter()
            .map(|&i| {
                self.points[i]
                    .iter()
                    .zip(&self.points[base])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let mut chosen: Vec<usize> = Vec::new();
        for col in 0..self.dim {
            let mut trial = chosen.clone();
            trial.push(col);
            let rows: Vec<Vec<Rational>> = directions
                .iter()
                .map(|d| trial.iter().map(|&c| d[c].clone()).collect())
                .collect();
            if RationalMatrix::from_rows(trial.len(), &rows).rank() == trial.len() {
                chosen = trial;
            }
        }
        let points = members
            .iter()
            .map(|&i| chosen.iter().map(|&c| self.points[i][c].clone()).collect())
            .collect();
        let labels = self.labels_of(set);
        let name = format!("{}[{}]", self.name, labels.join(","));
        Self::new(name, chosen.len(), labels, points)
    }

    /// `conv(V \ {i})`, in its own affine hull.
    pub fn delete(&self, i: usize) -> Result<Self, ConfigError> {
        self.restrict(self.all().without(i))
    }

    /// Image under `x -> a x + t` for an invertible `a`.
    pub fn transformed(&self, a: &RationalMatrix, t: &[Rational]) -> Result<Self, ConfigError> {
        let points = self
            .points
            .iter()
            .map(|p| {
                (0..a.rows())
                    .map(|r| dot(a.row(r), p) + &t[r])
                    .collect()
            })
            .collect();
        Self::new(
            format!("{}'", self.name),
            a.rows(),
            self.labels.clone(),
            points,
        )
    }

    pub(crate) fn split_cache(&self) -> &OnceLock<Vec<Split>> {
        &self.cache.splits
    }
}

/// Searches for a bijection of point indices `a -> b` under which the
/// canonical cocircuit sets coincide. Returns `perm` with `perm[i]` the image
/// of `a`'s point `i`.
pub fn oriented_matroid_equal(a: &PointConfiguration, b: &PointConfiguration) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.dim() != b.dim() {
        return None;
    }
    let ca = a.cocircuits();
    let cb = b.cocircuits();
    if ca.len() != cb.len() {
        return None;
    }
    let profile = |config: &PointConfiguration, cocircuits: &[SignVector]| -> Vec<(usize, usize, usize)> {
        (0..config.len())
            .map(|i| {
                let zeros = cocircuits.iter().filter(|c| !c.support().contains(i)).count();
                let facets = cocircuits
                    .iter()
                    .filter(|c| {
                        !c.support().contains(i) && (c.plus().is_empty() || c.minus().is_empty())
                    })
                    .count();
                (zeros, facets, config.neighbors(i).len())
            })
            .collect()
    };
    let pa = profile(a, ca);
    let pb = profile(b, cb);
    let mut sorted_a = pa.clone();
    let mut sorted_b = pb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut search = BijectionSearch {
        n: a.len(),
        ca,
        cb,
        pa: &pa,
        pb: &pb,
        perm: Vec::new(),
        used: IndexSet::EMPTY,
    };
    search.extend().then_some(search.perm)
}

struct BijectionSearch<'a> {
    n: usize,
    ca: &'a [SignVector],
    cb: &'a [SignVector],
    pa: &'a [(usize, usize, usize)],
    pb: &'a [(usize, usize, usize)],
    perm: Vec<usize>,
    used: IndexSet,
}

impl BijectionSearch<'_> {
    fn extend(&mut self) -> bool {
        let i = self.perm.len();
        if i == self.n {
            return true;
        }
        for j in 0..self.n {
            if self.used.contains(j) || self.pa[i] != self.pb[j] {
                continue;
            }
            self.perm.push(j);
            self.used.insert(j);
            if self.restrictions_agree() && self.extend() {
                return true;
            }
            self.perm.pop();
            self.used.remove(j);
        }
        false
    }

    /// Cocircuits restricted to the assigned prefix must agree as sets, up to
    /// sign, after transport through the partial bijection.
    fn restrictions_agree(&self) -> bool {
        let k = self.perm.len();
        let prefix = IndexSet::full(k);
        let left: HashSet<SignVector> = self
            .ca
            .iter()
            .map(|c| {
                SignVector::new(k, c.plus().intersection(prefix), c.minus().intersection(prefix))
                    .canonical()
            })
            .collect();
        let right: HashSet<SignVector> = self
            .cb
            .iter()
            .map(|c| {
                let signs: Vec<Sign> = self.perm.iter().map(|&j| c.sign(j)).collect();
                SignVector::from_signs(&signs).canonical()
            })
            .collect();
        left == right
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::family;

    fn config(name: &str, coords: &[&[i64]]) -> PointConfiguration {
        let dim = coords[0].len();
        let labels = (1..=coords.len()).map(|i| i.to_string()).collect();
        let points = coords
            .iter()
            .map(|c| c.iter().map(|&v| int(v)).collect())
            .collect();
        PointConfiguration::new(name, dim, labels, points).unwrap()
    }

    fn square() -> PointConfiguration {
        config("square", &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
    }

    fn pentagon() -> PointConfiguration {
        family::pentagon()
    }

    /// Supporting-hyperplane oracle: `F` is a face iff some functional is zero
    /// on `F` and positive elsewhere, i.e. `a . v_j >= 1` off `F` after scaling.
    fn face_oracle(config: &PointConfiguration, set: IndexSet) -> bool {
        if set == config.all() {
            return true;
        }
        // Split free variables a = a+ - a-; equalities as paired inequalities.
        let h = config.homogenized();
        let w = config.dim() + 1;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (i, v) in h.iter().enumerate() {
            let row: Vec<Rational> = v.iter().cloned().chain(v.iter().map(|x| -x.clone())).collect();
            if set.contains(i) {
                rows.push(row.clone());
                rhs.push(int(0));
                rows.push(row.into_iter().map(|x| -x).collect());
                rhs.push(int(0));
            } else {
                rows.push(row);
                rhs.push(int(1));
            }
        }
        let a = RationalMatrix::from_rows(2 * w, &rows);
        crate::arith::lp::feasible_point(&a, &rhs).is_some()
    }

    #[test]
    fn pentagon_contains_cocircuit_0p0mm() {
        let p = pentagon();
        let target = SignVector::parse("0+0--").unwrap();
        assert!(p.cocircuits().contains(&target));
        assert_eq!(p.cocircuits().len(), 10);
    }

    #[test]
    fn simplex_cocircuits_and_circuits() {
        for d in 1..=4 {
            let s = family::simplex(d).unwrap();
            assert_eq!(s.cocircuits().len(), d + 1);
            for c in s.cocircuits() {
                assert_eq!(c.zero_set().len(), d);
                assert_eq!(c.support().len(), 1);
            }
            assert!(s.circuits().is_empty());
        }
    }

    #[test]
    fn octahedron_has_coordinate_cocircuits() {
        let o = family::crosspolytope(3).unwrap();
        // labels +e1,-e1,+e2,-e2,+e3,-e3: plane x=0 zeroes the e2/e3 pairs.
        for pattern in ["+-0000", "00+-00", "0000+-"] {
            assert!(o.cocircuits().contains(&SignVector::parse(pattern).unwrap()), "{pattern}");
        }
    }

    #[test]
    fn square_has_single_diagonal_circuit() {
        let s = square();
        assert_eq!(s.circuits(), &[SignVector::parse("+-+-").unwrap()]);
    }

    #[test]
    fn prism_circuits_are_mixed_pairs() {
        let p = family::simplex_prism(3).unwrap();
        // labels e1,e2,e3,f1,f2,f3; circuits C+ = {e_i, f_j}, C- = {f_i, e_j}.
        let mut expected = BTreeSet::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let plus = IndexSet::from_iter([i, 3 + j]);
                let minus = IndexSet::from_iter([3 + i, j]);
                expected.insert(SignVector::new(6, plus, minus).canonical());
            }
        }
        let actual: BTreeSet<_> = p.circuits().iter().copied().collect();
        assert_eq!(actual, expected);
        assert_eq!(actual.len(), 3);
    }

    #[test]
    fn face_examples() {
        let p = pentagon();
        assert!(p.is_face_labels(&["1", "2"]).unwrap());
        assert!(!p.is_face_labels(&["1", "3"]).unwrap());
        assert!(p.is_face(p.all()));
        assert!(matches!(
            p.is_face_labels(&["9"]),
            Err(ConfigError::UnknownLabel(_))
        ));
    }

    #[test]
    fn face_test_agrees_with_separation_oracle() {
        let configs = [
            pentagon(),
            family::cube(3).unwrap(),
            family::crosspolytope(3).unwrap(),
            family::simplex_prism(3).unwrap(),
            family::prism_plus_point(),
        ];
        for c in &configs {
            for bits in 0..(1u64 << c.len()) {
                let set = IndexSet::from_bits(bits);
                assert_eq!(c.is_face(set), face_oracle(c, set), "{} {:?}", c.name(), set);
            }
        }
    }

    #[test]
    fn edge_examples() {
        let p = pentagon();
        assert_eq!(p.edges(), &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        let o = family::crosspolytope(3).unwrap();
        assert_eq!(o.edges().len(), 12);
        for i in 0..3 {
            assert!(!o.is_edge(2 * i, 2 * i + 1));
        }
        let prism = family::simplex_prism(3).unwrap();
        let mut expected = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                expected.push((i, j));
                expected.push((3 + i, 3 + j));
            }
            expected.push((i, 3 + i));
        }
        expected.sort();
        assert_eq!(prism.edges(), expected.as_slice());
    }

    #[test]
    fn facet_examples() {
        assert_eq!(family::simplex(3).unwrap().facets().len(), 4);
        let cube = family::cube(3).unwrap();
        assert_eq!(cube.facets().len(), 6);
        assert!(cube.facets().iter().all(|f| f.vertices.len() == 4));
        let p = pentagon();
        let facet_edges: BTreeSet<IndexSet> = p.facets().iter().map(|f| f.vertices).collect();
        let edges: BTreeSet<IndexSet> = p
            .edges()
            .iter()
            .map(|&(a, b)| IndexSet::from_iter([a, b]))
            .collect();
        assert_eq!(facet_edges, edges);
    }

    #[test]
    fn rejects_non_vertices_and_degenerate_input() {
        let err = PointConfiguration::new(
            "bad",
            2,
            vec!["a".into(), "b".into(), "c".into(), "m".into()],
            vec![
                vec![int(0), int(0)],
                vec![int(2), int(0)],
                vec![int(0), int(2)],
                vec![rat(1, 2), rat(1, 2)],
            ],
        );
        assert_eq!(err.unwrap_err(), ConfigError::NotAVertex("m".into()));
        let err = PointConfiguration::new(
            "flat",
            2,
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![int(0), int(0)], vec![int(1), int(1)], vec![int(2), int(2)]],
        );
        assert!(matches!(err, Err(ConfigError::NotFullDimensional { .. })));
    }

    #[test]
    fn om_equality_examples() {
        let o = family::crosspolytope(3).unwrap();
        let scaled = o
            .transformed(
                &RationalMatrix::from_i64(3, 3, &[2, 0, 0, 0, 2, 0, 0, 0, 2]),
                &[int(0), int(0), int(0)],
            )
            .unwrap();
        let perm = oriented_matroid_equal(&o, &scaled).unwrap();
        assert_eq!(perm.len(), 6);

        let mut points = o.points().to_vec();
        points[0] = vec![int(1), rat(1, 101), rat(1, 103)];
        let perturbed =
            PointConfiguration::new("perturbed", 3, o.labels().to_vec(), points).unwrap();
        assert!(oriented_matroid_equal(&o, &perturbed).is_none());

        let trapezoid = config("trapezoid", &[&[0, 0], &[3, 0], &[2, 1], &[1, 1]]);
        assert!(oriented_matroid_equal(&square(), &trapezoid).is_some());
    }

    #[test]
    fn om_equality_is_reflexive_with_identity_available() {
        let p = pentagon();
        let perm = oriented_matroid_equal(&p, &p).unwrap();
        // The search tries candidates in index order, so it finds the identity first.
        assert_eq!(perm, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn restrict_reembeds_faces() {
        let cube = family::cube(3).unwrap();
        let facet = cube.facets()[0].vertices;
        let face = cube.restrict(facet).unwrap();
        assert_eq!(face.dim(), 2);
        assert_eq!(face.len(), 4);
        assert_eq!(face.circuits().len(), 1);
    }
}

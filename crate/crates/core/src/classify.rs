//! Recognition of totally splittable polytopes: join factors that are
//! simplices, polygons, crosspolytopes or prisms over simplices.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::arith::{solve_linear, LinearSolution, Rational, RationalMatrix};
use crate::family;
use crate::gale::{gale_dual, GaleDiagram};
use crate::labels::IndexSet;
use crate::om::{oriented_matroid_equal, PointConfiguration};
use crate::splits::{compatible, vertex_split_at};
use crate::triangulation::{is_totally_splittable_bruteforce, EnumerationBudget, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("vertex {0} has no vertex split")]
    MissingVertexSplit(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Simplex(usize),
    Polygon(usize),
    CrossPolytope(usize),
    SimplexPrism(usize),
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Simplex(d) => write!(f, "Simplex({d})"),
            FactorKind::Polygon(n) => write!(f, "Polygon({n})"),
            FactorKind::CrossPolytope(d) => write!(f, "CrossPolytope({d})"),
            FactorKind::SimplexPrism(d) => write!(f, "SimplexPrism({d})"),
        }
    }
}

impl FactorKind {
    /// The canonical model this kind is certified against.
    pub fn model(&self) -> Option<PointConfiguration> {
        match *self {
            FactorKind::Simplex(d) => family::simplex(d).ok(),
            FactorKind::Polygon(n) => family::polygon(n).ok(),
            FactorKind::CrossPolytope(d) => family::crosspolytope(d).ok(),
            FactorKind::SimplexPrism(d) => family::simplex_prism(d).ok(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    TotallySplittable,
    NotTotallySplittable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::TotallySplittable => f.write_str("TotallySplittable"),
            Verdict::NotTotallySplittable => f.write_str("NotTotallySplittable"),
        }
    }
}

/// One join factor. `kind` is `None` for a factor that was not recognized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub kind: Option<FactorKind>,
    pub labels: Vec<String>,
    /// Factor label to the label of the canonical model.
    pub bijection: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    MissingVertexSplit { label: String },
    GaleMultiplicity { labels: Vec<String> },
    Unrecognized { labels: Vec<String>, reason: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MissingVertexSplit { label } => write!(f, "vertex {label} has no vertex split"),
            Witness::GaleMultiplicity { labels } => {
                write!(f, "Gale ray shared by {} vertices: {}", labels.len(), labels.join(","))
            }
            Witness::Unrecognized { labels, reason } => write!(f, "factor {}: {reason}", labels.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub apexes: Vec<String>,
    /// Finest join partition, apexes as singletons.
    pub partition: Vec<Vec<String>>,
    /// Ranks of the homogenized parts add up to `d + 1`.
    pub rank_additive: bool,
    /// No vertex split of one part is compatible with one of another part.
    pub cross_part_splits_incompatible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub factors: Vec<Factor>,
    pub certificate: Certificate,
    pub witness: Option<Witness>,
    /// A regular triangulation that no set of splits induces.
    pub counterexample: Option<Triangulation>,
    /// Brute-force answer, when the enumeration fit the budget.
    pub brute_force: Option<bool>,
    /// The verdict rests on structural tests only.
    pub structural: bool,
}

impl ClassificationResult {
    pub fn kinds(&self) -> Vec<Option<FactorKind>> {
        self.factors.iter().map(|f| f.kind).collect()
    }

    pub fn is_totally_splittable(&self) -> bool {
        self.verdict == Verdict::TotallySplittable
    }
}

/// Labels with a zero Gale ray, and the diagram of the rest.
pub fn strip_apexes(g: &GaleDiagram) -> (Vec<String>, GaleDiagram) {
    let apexes = g.zero_rays().iter().map(|i| g.labels()[i].clone()).collect();
    (apexes, g.without_zero_rays())
}

/// Connected components of the matroid of homogenized points; two points
/// are joined when some circuit contains both. Coloops come out as
/// singletons. Sorted by smallest index.
pub fn join_parts(config: &PointConfiguration) -> Vec<IndexSet> {
    let mut uf = UnionFind::new(config.len());
    for c in config.circuits() {
        let support = c.support().to_vec();
        for w in support.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut parts: BTreeMap<usize, IndexSet> = BTreeMap::new();
    for i in 0..config.len() {
        parts.entry(uf.find(i)).or_default().insert(i);
    }
    let mut out: Vec<IndexSet> = parts.into_values().collect();
    out.sort_by_key(|p| p.first());
    out
}

/// The finest partition of the labels into join factors.
pub fn join_decompose(config: &PointConfiguration) -> Vec<Vec<String>> {
    join_parts(config).into_iter().map(|p| config.labels_of(p)).collect()
}

/// Solutions of `x ∈ v^⊥` for every vertex `v` of `set`.
pub fn perp_intersection_of(config: &PointConfiguration, set: IndexSet) -> Result<LinearSolution, ClassifyError> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in set.iter() {
        let split =
            vertex_split_at(config, v).ok_or_else(|| ClassifyError::MissingVertexSplit(config.label(v).to_string()))?;
        rows.push(split.hyperplane().rational_normal());
        rhs.push(split.hyperplane().offset().clone());
    }
    Ok(solve_linear(&RationalMatrix::from_rows(config.dim(), &rows), &rhs))
}

pub fn perp_intersection(config: &PointConfiguration) -> Result<LinearSolution, ClassifyError> {
    perp_intersection_of(config, config.all())
}

enum Rejection {
    Precondition(String),
    Witness(Witness),
}

fn certify(config: &PointConfiguration, kind: FactorKind) -> Option<BTreeMap<String, String>> {
    let model = kind.model()?;
    let perm = oriented_matroid_equal(config, &model)?;
    Some(
        perm.iter()
            .enumerate()
            .map(|(i, &j)| (config.label(i).to_string(), model.label(j).to_string()))
            .collect(),
    )
}

fn recognize(config: &PointConfiguration) -> Result<(FactorKind, Option<BTreeMap<String, String>>), Rejection> {
    let (n, d) = (config.len(), config.dim());
    let unrecognized = |reason: &str| {
        Rejection::Witness(Witness::Unrecognized {
            labels: config.labels().to_vec(),
            reason: reason.to_string(),
        })
    };
    if n == d + 1 {
        let kind = FactorKind::Simplex(d);
        let bijection = (0..n).map(|i| (config.label(i).to_string(), i.to_string())).collect();
        return Ok((kind, Some(bijection)));
    }
    if d == 2 {
        let kind = FactorKind::Polygon(n);
        return Ok((kind, certify(config, kind)));
    }
    let g = gale_dual(config);
    if !g.is_proper() {
        return Err(Rejection::Precondition(format!("{} is a pyramid", config.name())));
    }
    if join_parts(config).len() > 1 {
        return Err(Rejection::Precondition(format!("{} is a join", config.name())));
    }
    let profile = g.structure_profile();
    if profile.max_multiplicity >= 3 {
        let class = profile
            .double_point_classes
            .iter()
            .find(|c| c.len() == profile.max_multiplicity)
            .expect("largest class exists");
        return Err(Rejection::Witness(Witness::GaleMultiplicity {
            labels: class.iter().map(|&i| config.label(i).to_string()).collect(),
        }));
    }
    if let Some(v) = (0..n).find(|&v| vertex_split_at(config, v).is_none()) {
        return Err(Rejection::Witness(Witness::MissingVertexSplit {
            label: config.label(v).to_string(),
        }));
    }
    let perp = perp_intersection(config).expect("every vertex has a vertex split");
    if perp != LinearSolution::Inconsistent {
        if n != 2 * d {
            return Err(unrecognized("vertex split hyperplanes meet, but n != 2d"));
        }
        let kind = FactorKind::CrossPolytope(d);
        return match certify(config, kind) {
            Some(b) => Ok((kind, Some(b))),
            None => Err(unrecognized("vertex split hyperplanes meet, but no crosspolytope bijection")),
        };
    }
    if n == 2 * d && g.is_antipodal() {
        let kind = FactorKind::SimplexPrism(d);
        return match certify(config, kind) {
            Some(b) => Ok((kind, Some(b))),
            None => Err(unrecognized("antipodal Gale diagram, but no prism bijection")),
        };
    }
    Err(unrecognized("neither crosspolytope, prism, polygon nor simplex"))
}

/// The kind of a join-indecomposable factor, or `None` when it is none of
/// the four kinds.
pub fn recognize_factor(config: &PointConfiguration) -> Result<Option<FactorKind>, ClassifyError> {
    match recognize(config) {
        Ok((kind, _)) => Ok(Some(kind)),
        Err(Rejection::Precondition(msg)) => Err(ClassifyError::PreconditionViolated(msg)),
        Err(Rejection::Witness(Witness::MissingVertexSplit { label })) => {
            Err(ClassifyError::MissingVertexSplit(label))
        }
        Err(Rejection::Witness(_)) => Ok(None),
    }
}

fn cross_part_splits_incompatible(config: &PointConfiguration, parts: &[IndexSet]) -> bool {
    let splits: Vec<_> = (0..config.len()).map(|v| vertex_split_at(config, v)).collect();
    for (a, pa) in parts.iter().enumerate() {
        for pb in &parts[a + 1..] {
            for u in pa.iter() {
                for w in pb.iter() {
                    if let (Some(su), Some(sw)) = (&splits[u], &splits[w]) {
                        if su != sw && compatible(config, su, sw).unwrap_or(true) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn classify(config: &PointConfiguration) -> ClassificationResult {
    classify_with(config, EnumerationBudget::default())
}

/// Splits off apexes and join factors, recognizes each factor and, for a
/// negative verdict within `budget`, searches for a regular triangulation
/// that is not split.
pub fn classify_with(config: &PointConfiguration, budget: EnumerationBudget) -> ClassificationResult {
    let parts = join_parts(config);
    let apex_set: IndexSet = parts.iter().filter(|p| p.len() == 1).fold(IndexSet::EMPTY, |a, p| a.union(*p));
    let rank_additive = parts
        .iter()
        .map(|&p| config.affine_rank_of(p))
        .sum::<usize>()
        == config.dim() + 1;
    let certificate = Certificate {
        apexes: config.labels_of(apex_set),
        partition: parts.iter().map(|&p| config.labels_of(p)).collect(),
        rank_additive,
        cross_part_splits_incompatible: cross_part_splits_incompatible(config, &parts),
    };

    let mut groups: Vec<IndexSet> = parts.iter().copied().filter(|p| p.len() > 1).collect();
    if !apex_set.is_empty() {
        groups.push(apex_set);
    }
    groups.sort_by_key(|p| p.first());

    let mut factors = Vec::new();
    let mut witness = None;
    for group in groups {
        let labels = config.labels_of(group);
        let factor = if group == apex_set {
            let d = group.len() - 1;
            Factor {
                kind: Some(FactorKind::Simplex(d)),
                bijection: Some(labels.iter().enumerate().map(|(i, l)| (l.clone(), i.to_string())).collect()),
                labels,
            }
        } else {
            let restricted = config.restrict(group).expect("a part of a valid configuration is valid");
            match recognize(&restricted) {
                Ok((kind, bijection)) => Factor {
                    kind: Some(kind),
                    labels,
                    bijection,
                },
                Err(rejection) => {
                    let w = match rejection {
                        Rejection::Witness(w) => w,
                        Rejection::Precondition(reason) => Witness::Unrecognized {
                            labels: labels.clone(),
                            reason,
                        },
                    };
                    witness.get_or_insert(w);
                    Factor {
                        kind: None,
                        labels,
                        bijection: None,
                    }
                }
            }
        };
        factors.push(factor);
    }

    let verdict = if witness.is_none() {
        Verdict::TotallySplittable
    } else {
        Verdict::NotTotallySplittable
    };
    let mut result = ClassificationResult {
        verdict,
        factors,
        certificate,
        witness,
        counterexample: None,
        brute_force: None,
        structural: true,
    };
    if verdict == Verdict::NotTotallySplittable && budget.admits(config) {
        if let Ok(bf) = is_totally_splittable_bruteforce(config, budget) {
            result.brute_force = Some(bf.answer);
            result.counterexample = bf.witness;
            result.structural = false;
        }
    }
    result
}

/// Exact zero point of `solution`, when it is a single point.
pub fn unique_point(solution: &LinearSolution) -> Option<&[Rational]> {
    match solution {
        LinearSolution::Affine(flat) if flat.directions.is_empty() => Some(&flat.point),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::family::FamilySpec;
    use crate::triangulation::is_split_triangulation;
    use crate::splits::enumerate_splits;
    use num_traits::Zero;

    fn gen(spec: &str) -> PointConfiguration {
        spec.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn octahedron_is_a_crosspolytope() {
        let o = family::crosspolytope(3).unwrap();
        let r = classify(&o);
        assert_eq!(r.verdict, Verdict::TotallySplittable);
        assert_eq!(r.kinds(), vec![Some(FactorKind::CrossPolytope(3))]);
        assert!(r.certificate.apexes.is_empty());
        let origin = vec![Rational::zero(); 3];
        assert_eq!(unique_point(&perp_intersection(&o).unwrap()), Some(origin.as_slice()));
    }

    #[test]
    fn prism_and_hexagon() {
        let p = family::simplex_prism(3).unwrap();
        assert_eq!(recognize_factor(&p).unwrap(), Some(FactorKind::SimplexPrism(3)));
        assert_eq!(perp_intersection(&p).unwrap(), LinearSolution::Inconsistent);
        let h = family::polygon(6).unwrap();
        assert_eq!(classify(&h).kinds(), vec![Some(FactorKind::Polygon(6))]);
    }

    #[test]
    fn prism_facet_perp_point() {
        let p = family::simplex_prism(3).unwrap();
        let facet = p.index_set(&["e1", "e2", "f1", "f2"]).unwrap();
        let solution = perp_intersection_of(&p, facet).unwrap();
        let expected = vec![rat(0, 1), rat(0, 1), rat(-1, 2)];
        assert_eq!(unique_point(&solution), Some(expected.as_slice()));
    }

    #[test]
    fn cube_is_rejected_with_counterexample() {
        let c = family::cube(3).unwrap();
        let r = classify(&c);
        assert_eq!(r.verdict, Verdict::NotTotallySplittable);
        assert!(matches!(r.witness, Some(Witness::Unrecognized { .. })));
        let t = r.counterexample.expect("cube fits the budget");
        assert!(!is_split_triangulation(&c, &t, enumerate_splits(&c)));
        assert_eq!(r.brute_force, Some(false));
        assert!(!r.structural);
    }

    #[test]
    fn joins_and_pyramids_factor() {
        let r = classify(&gen("join(polygon:5,simplex:1)"));
        assert!(r.is_totally_splittable());
        assert_eq!(r.kinds(), vec![Some(FactorKind::Polygon(5)), Some(FactorKind::Simplex(1))]);
        assert!(r.certificate.rank_additive);
        assert!(r.certificate.cross_part_splits_incompatible);

        let pyr = gen("pyramid(pyramid(polygon:4))");
        let (apexes, core) = strip_apexes(&gale_dual(&pyr));
        assert_eq!(apexes.len(), 2);
        assert_eq!(core.len(), 4);
        let r = classify(&pyr);
        assert_eq!(r.kinds(), vec![Some(FactorKind::Polygon(4)), Some(FactorKind::Simplex(1))]);
    }

    #[test]
    fn simplex_parts_are_singletons() {
        let s = family::simplex(3).unwrap();
        assert_eq!(join_decompose(&s).len(), 4);
        assert_eq!(classify(&s).kinds(), vec![Some(FactorKind::Simplex(3))]);
        assert_eq!(join_decompose(&family::crosspolytope(3).unwrap()).len(), 1);
    }

    #[test]
    fn bijections_verify() {
        for spec in ["crosspolytope:3", "simplex_prism:3", "polygon:5", "crosspolytope:4"] {
            let c = gen(spec);
            let r = classify(&c);
            let f = &r.factors[0];
            let model = f.kind.unwrap().model().unwrap();
            let bijection = f.bijection.as_ref().unwrap();
            let image: Vec<usize> = c
                .labels()
                .iter()
                .map(|l| model.index_of(&bijection[l]).unwrap())
                .collect();
            let mapped = PointConfiguration::new(
                "mapped",
                model.dim(),
                (0..c.len()).map(|i| model.label(image[i]).to_string()).collect(),
                image.iter().map(|&j| model.point(j).to_vec()).collect(),
            )
            .unwrap();
            assert_eq!(c.cocircuits(), mapped.cocircuits(), "{spec}");
        }
    }

    #[test]
    fn perturbed_octahedron_lacks_vertex_splits() {
        let p = family::perturbed_octahedron(0).unwrap();
        let r = classify(&p);
        assert_eq!(r.verdict, Verdict::NotTotallySplittable);
        assert!(matches!(
            recognize_factor(&p),
            Err(ClassifyError::MissingVertexSplit(_))
        ));
    }

    #[test]
    fn prism_plus_point_is_rejected() {
        let r = classify(&family::prism_plus_point());
        assert_eq!(r.verdict, Verdict::NotTotallySplittable);
        assert_eq!(r.brute_force, Some(false));
    }
}

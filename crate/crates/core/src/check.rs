//! Cross-checks of the structural classification against brute force and
//! the invariants tying the modules together.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{rat, LinearSolution, RationalMatrix};
use crate::classify::{classify_with, perp_intersection, ClassificationResult, FactorKind};
use crate::gale::gale_dual;
use crate::labels::IndexSet;
use crate::om::{PointConfiguration, SignVector};
use crate::splits::{
    compatible, enumerate_splits, splits_via_gale, vertex_split_pairs, weakly_compatible, ComplexOptions,
};
use crate::triangulation::{
    enumerate_triangulations, f_vector, is_foldable, is_totally_splittable_bruteforce, split_triangulation_check,
    BruteForceVerdict, EnumerationBudget,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub classification: ClassificationResult,
    pub brute_force: Option<BruteForceVerdict>,
    pub budget_note: Option<String>,
    pub invariants: Vec<InvariantResult>,
}

impl CheckReport {
    /// Structural and brute-force verdicts agree where both exist.
    pub fn verdicts_agree(&self) -> bool {
        match &self.brute_force {
            Some(bf) => bf.answer == self.classification.is_totally_splittable() && !bf.inconsistent,
            None => true,
        }
    }

    pub fn consistent(&self) -> bool {
        self.verdicts_agree() && self.invariants.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> Vec<&InvariantResult> {
        self.invariants.iter().filter(|i| !i.holds).collect()
    }
}

fn record(out: &mut Vec<InvariantResult>, name: &str, holds: bool, detail: impl Into<String>) {
    out.push(InvariantResult {
        name: name.to_string(),
        holds,
        detail: detail.into(),
    });
}

fn split_cocircuits(config: &PointConfiguration) -> BTreeSet<SignVector> {
    enumerate_splits(config).iter().map(|s| s.cocircuit().canonical()).collect()
}

/// An invertible affine map with a shear, a scaling and a translation.
fn recoordinatize(config: &PointConfiguration) -> Option<PointConfiguration> {
    let d = config.dim();
    let mut a = RationalMatrix::identity(d);
    for i in 0..d {
        a.set(i, i, rat(i as i64 + 2, 1));
        if i + 1 < d {
            a.set(i, i + 1, rat(-1, 3));
        }
    }
    let t: Vec<_> = (0..d).map(|i| rat(1 - 2 * i as i64, 2)).collect();
    config.transformed(&a, &t).ok()
}

fn structural_invariants(config: &PointConfiguration, options: ComplexOptions, out: &mut Vec<InvariantResult>) {
    let g = gale_dual(config);
    let primal_circuits: BTreeSet<_> = config.circuits().iter().copied().collect();
    let primal_cocircuits: BTreeSet<_> = config.cocircuits().iter().copied().collect();
    let dual_cocircuits: BTreeSet<_> = g.cocircuits().into_iter().collect();
    let dual_circuits: BTreeSet<_> = g.circuits().into_iter().collect();
    record(
        out,
        "gale_duality",
        primal_circuits == dual_cocircuits && primal_cocircuits == dual_circuits,
        format!("{} circuits, {} cocircuits", primal_circuits.len(), primal_cocircuits.len()),
    );

    let splits = split_cocircuits(config);
    if g.is_proper() {
        let via_gale: Option<BTreeSet<SignVector>> = splits_via_gale(&g).ok().map(|v| v.into_iter().collect());
        record(
            out,
            "splits_via_gale",
            via_gale.as_ref() == Some(&splits),
            format!("{} splits", splits.len()),
        );
    }

    if let Some(moved) = recoordinatize(config) {
        record(
            out,
            "affine_invariance",
            split_cocircuits(&moved) == splits,
            "sheared, scaled and translated copy",
        );
    }

    let mut law = true;
    let mut detail = String::new();
    for (u, w, su, sw) in vertex_split_pairs(config) {
        if su == sw {
            continue;
        }
        let c = compatible(config, &su, &sw).unwrap_or(!config.is_edge(u, w));
        if c == config.is_edge(u, w) {
            law = false;
            detail = format!("{} {}", config.label(u), config.label(w));
        }
    }
    record(out, "vertex_split_compatibility", law, detail);

    let all = enumerate_splits(config);
    if all.len() <= options.max_splits {
        let mut holds = true;
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let pair = [all[i].clone(), all[j].clone()];
                if compatible(config, &pair[0], &pair[1]).unwrap_or(false)
                    && !weakly_compatible(config, &pair).unwrap_or(false)
                {
                    holds = false;
                }
            }
        }
        record(out, "compatible_implies_weak", holds, format!("{} splits", all.len()));
    }
}

fn classification_invariants(config: &PointConfiguration, r: &ClassificationResult, out: &mut Vec<InvariantResult>) {
    let mut covered = IndexSet::EMPTY;
    let mut disjoint = true;
    for f in &r.factors {
        let set = config.index_set(&f.labels).unwrap_or(IndexSet::EMPTY);
        disjoint &= covered.is_disjoint(set);
        covered = covered.union(set);
    }
    record(out, "factors_partition_labels", disjoint && covered == config.all(), "");
    record(
        out,
        "join_certificate",
        r.certificate.rank_additive && r.certificate.cross_part_splits_incompatible,
        "",
    );
    if r.is_totally_splittable() {
        record(out, "bijections_present", r.factors.iter().all(|f| f.bijection.is_some()), "");
        let balanced = config.circuits().iter().all(SignVector::is_balanced);
        record(out, "balanced_circuits", balanced, "");
    }
    for f in &r.factors {
        let Some(kind) = f.kind else { continue };
        if matches!(kind, FactorKind::Simplex(_) | FactorKind::Polygon(_)) {
            continue;
        }
        let Ok(set) = config.index_set(&f.labels) else { continue };
        let Ok(factor) = config.restrict(set) else { continue };
        let meets = perp_intersection(&factor).is_ok_and(|s| s != LinearSolution::Inconsistent);
        record(
            out,
            "crosspolytope_criterion",
            meets == matches!(kind, FactorKind::CrossPolytope(_)),
            format!("{kind}"),
        );
    }
}

fn triangulation_invariants(
    config: &PointConfiguration,
    r: &ClassificationResult,
    budget: EnumerationBudget,
    out: &mut Vec<InvariantResult>,
) {
    if !r.is_totally_splittable() {
        return;
    }
    let Ok(all) = enumerate_triangulations(config, false, budget) else { return };
    let f_vectors: BTreeSet<Vec<usize>> = all.iter().map(|t| f_vector(config, t)).collect();
    record(out, "equidecomposable", f_vectors.len() == 1, format!("{f_vectors:?}"));
    let splits = enumerate_splits(config);
    let foldable = all
        .iter()
        .filter(|t| split_triangulation_check(config, t, splits).is_split())
        .all(is_foldable);
    record(out, "split_triangulations_foldable", foldable, format!("{} triangulations", all.len()));
}

/// Classification, brute force within `budget`, and every invariant that
/// applies to `config`.
pub fn check(config: &PointConfiguration, budget: EnumerationBudget, options: ComplexOptions) -> CheckReport {
    let classification = classify_with(config, budget);
    let (brute_force, budget_note) = match is_totally_splittable_bruteforce(config, budget) {
        Ok(bf) => (Some(bf), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut invariants = Vec::new();
    structural_invariants(config, options, &mut invariants);
    classification_invariants(config, &classification, &mut invariants);
    triangulation_invariants(config, &classification, budget, &mut invariants);
    CheckReport {
        classification,
        brute_force,
        budget_note,
        invariants,
    }
}

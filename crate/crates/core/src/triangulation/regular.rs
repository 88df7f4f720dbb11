//! Regularity of triangulations via exact linear feasibility.

use num_traits::Zero;

use super::placing::affine_coordinates;
use super::Triangulation;
use crate::arith::lp::feasible_point;
use crate::arith::{dot, int, Rational, RationalMatrix};
use crate::om::PointConfiguration;

/// Rows `h(w) - sum_i a_i h(s_i)` for each cell and each vertex `w` outside
/// it, where `a` are the affine coordinates of `w` in the cell. Positive rows
/// mean every lifted outside vertex lies strictly above the lifted cell.
fn folding_rows(config: &PointConfiguration, t: &Triangulation) -> Vec<Vec<Rational>> {
    let n = config.len();
    let mut rows = Vec::new();
    for &cell in t.cells() {
        let members = cell.to_vec();
        for w in 0..n {
            if cell.contains(w) {
                continue;
            }
            let coords = affine_coordinates(config, cell, config.point(w))
                .expect("full-dimensional cell spans the ambient space");
            let mut row = vec![Rational::zero(); n];
            row[w] = int(1);
            for (&s, a) in members.iter().zip(&coords) {
                row[s] -= a;
            }
            rows.push(row);
        }
    }
    rows
}

/// Heights inducing `t`, if any exist. The strict system is homogeneous, so
/// requiring each row to be at least one loses nothing.
pub fn regular_heights(config: &PointConfiguration, t: &Triangulation) -> Option<Vec<Rational>> {
    let rows = folding_rows(config, t);
    let a = RationalMatrix::from_rows(config.len(), &rows);
    let b = vec![int(1); rows.len()];
    let heights = feasible_point(&a, &b)?;
    debug_assert!(rows.iter().all(|r| dot(r, &heights) >= int(1)));
    Some(heights)
}

pub fn is_regular(config: &PointConfiguration, t: &Triangulation) -> bool {
    regular_heights(config, t).is_some()
}

/// Whether `heights` induce `t`: every folding row is strictly positive.
pub fn heights_induce(config: &PointConfiguration, t: &Triangulation, heights: &[Rational]) -> bool {
    folding_rows(config, t)
        .iter()
        .all(|r| dot(r, heights) > Rational::zero())
}

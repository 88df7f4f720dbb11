//! Placing triangulations.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::{Triangulation, TriangulationError};
use crate::arith::{homogenize, solve_linear, Rational, RationalMatrix};
use crate::labels::IndexSet;
use crate::om::PointConfiguration;

/// Affine coordinates of `x` with respect to the simplex `cell`, which must
/// contain `x` in its affine hull.
pub(crate) fn affine_coordinates(
    config: &PointConfiguration,
    cell: IndexSet,
    x: &[Rational],
) -> Option<Vec<Rational>> {
    let members = cell.to_vec();
    let rows = config.dim() + 1;
    let mut a = RationalMatrix::zeros(rows, members.len());
    for (c, &i) in members.iter().enumerate() {
        for (r, v) in homogenize(config.point(i)).into_iter().enumerate() {
            a.set(r, c, v);
        }
    }
    solve_linear(&a, &homogenize(x)).unique().map(<[Rational]>::to_vec)
}

/// Inserts the vertices in `order`, coning each new vertex over the boundary
/// facets of the current triangulation that it sees, or over all cells when
/// it raises the dimension.
pub fn placing_triangulation(
    config: &PointConfiguration,
    order: &[usize],
) -> Result<Triangulation, TriangulationError> {
    let n = config.len();
    let mut seen = IndexSet::EMPTY;
    for &i in order {
        if i >= n || seen.contains(i) {
            return Err(TriangulationError::DegenerateOrder);
        }
        seen.insert(i);
    }
    if seen != config.all() {
        return Err(TriangulationError::DegenerateOrder);
    }

    let mut cells = vec![IndexSet::singleton(order[0])];
    let mut placed = IndexSet::singleton(order[0]);
    let mut rank = 1;
    for &p in &order[1..] {
        let new_rank = config.affine_rank_of(placed.with(p));
        if new_rank > rank {
            for c in cells.iter_mut() {
                c.insert(p);
            }
            rank = new_rank;
        } else {
            let mut boundary: BTreeMap<IndexSet, Vec<IndexSet>> = BTreeMap::new();
            for &c in &cells {
                for v in c.iter() {
                    boundary.entry(c.without(v)).or_default().push(c);
                }
            }
            let mut added = Vec::new();
            for (facet, owners) in boundary {
                let [cell] = owners.as_slice() else { continue };
                let coords = affine_coordinates(config, *cell, config.point(p))
                    .ok_or(TriangulationError::DegenerateOrder)?;
                let opposite = cell.difference(facet).first().expect("facet misses one vertex");
                let position = cell.iter().position(|v| v == opposite).expect("vertex of cell");
                if coords[position].is_negative() {
                    added.push(facet.with(p));
                }
            }
            cells.extend(added);
        }
        placed.insert(p);
    }
    Ok(Triangulation::new(cells))
}

pub fn placing_triangulation_labels<S: AsRef<str>>(
    config: &PointConfiguration,
    order: &[S],
) -> Result<Triangulation, TriangulationError> {
    let indices = order
        .iter()
        .map(|l| {
            config
                .index_of(l.as_ref())
                .map_err(|_| TriangulationError::UnknownLabel(l.as_ref().to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    placing_triangulation(config, &indices)
}

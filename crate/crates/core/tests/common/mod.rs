#![allow(dead_code)]

use splitscope::family::{self, FamilySpec};
use splitscope::PointConfiguration;

pub const CATALOG: &[&str] = &[
    "pentagon",
    "polygon:4",
    "polygon:6",
    "polygon:7",
    "simplex:1",
    "simplex:2",
    "simplex:3",
    "simplex:4",
    "crosspolytope:2",
    "crosspolytope:3",
    "crosspolytope:4",
    "simplex_prism:2",
    "simplex_prism:3",
    "simplex_prism:4",
    "cube:2",
    "cube:3",
    "prism_plus_point",
    "perturbed_octahedron:0",
    "perturbed_octahedron:1",
    "pyramid(polygon:4)",
    "pyramid(pentagon)",
    "pyramid(pyramid(polygon:4))",
    "pyramid(crosspolytope:3)",
    "pyramid(simplex_prism:3)",
    "pyramid(cube:3)",
    "pyramid(prism_plus_point)",
    "join(polygon:4,simplex:1)",
    "join(polygon:5,simplex:1)",
    "join(simplex:1,simplex:1)",
    "join(crosspolytope:2,simplex:1)",
];

pub fn generate(spec: &str) -> PointConfiguration {
    spec.parse::<FamilySpec>()
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
        .generate()
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Every catalog member, plus the octahedron with one perturbed vertex.
pub fn catalog() -> Vec<PointConfiguration> {
    let mut out: Vec<PointConfiguration> = CATALOG.iter().map(|s| generate(s)).collect();
    out.push(family::single_perturbed_octahedron());
    out
}

use std::collections::BTreeSet;

use splitscope::arith::{int, rat, RationalMatrix};
use splitscope::{enumerate_splits, SignVector};

pub fn split_set(config: &PointConfiguration) -> BTreeSet<SignVector> {
    enumerate_splits(config).iter().map(|s| s.cocircuit().canonical()).collect()
}

/// Three invertible affine images: a triangular shear, a scaled coordinate
/// cycle, and a dense integer matrix of determinant one.
pub fn recoordinatizations(config: &PointConfiguration) -> Vec<PointConfiguration> {
    let d = config.dim();
    let mut shear = RationalMatrix::identity(d);
    let mut cycle = RationalMatrix::zeros(d, d);
    let mut dense = RationalMatrix::identity(d);
    for i in 0..d {
        for j in i + 1..d {
            shear.set(i, j, rat(1, 2));
        }
        cycle.set(i, (i + 1) % d, rat(-(i as i64) - 1, 3));
        for j in 0..i {
            dense.set(i, j, int((i + 2 * j) as i64 % 3 - 1));
        }
    }
    // Lower unitriangular times upper unitriangular.
    let mut upper = RationalMatrix::identity(d);
    for i in 0..d {
        for j in i + 1..d {
            upper.set(i, j, int(((i * j) % 2) as i64 + 1));
        }
    }
    let dense = dense.mul(&upper);
    let shift = |k: i64| -> Vec<_> { (0..d).map(|i| rat(k * i as i64 + 1, 7)).collect() };
    [(shear, shift(1)), (cycle, shift(-2)), (dense, shift(3))]
        .into_iter()
        .map(|(a, t)| config.transformed(&a, &t).expect("invertible maps keep vertices"))
        .collect()
}

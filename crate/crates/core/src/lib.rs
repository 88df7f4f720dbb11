//! Splits, split complexes and total splittability of convex polytopes,
//! computed exactly over the rationals through oriented matroids and Gale
//! duality.

pub mod arith;
pub mod check;
pub mod classify;
pub mod cli;
pub mod family;
pub mod gale;
pub mod labels;
pub mod om;
pub mod report;
pub mod splits;
pub mod triangulation;

pub use classify::{classify, ClassificationResult, FactorKind, Verdict};
pub use arith::{AffineHyperplane, Rational, RationalMatrix, Sign};
pub use gale::{gale_dual, GaleDiagram};
pub use labels::IndexSet;
pub use om::{oriented_matroid_equal, PointConfiguration, SignVector};
pub use splits::{enumerate_splits, Split};
pub use triangulation::Triangulation;

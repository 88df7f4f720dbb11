//! Exact rational linear algebra.
//!
//! Everything here works over arbitrary-precision rationals. Rank and kernel
//! computations go through fraction-free (Bareiss) elimination on an integer
//! scaling of the input; general linear solves use rational Gauss-Jordan.

pub mod fm;
pub mod lp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("points do not span a hyperplane (affine rank {rank}, ambient dimension {dim})")]
    DegenerateSpan { rank: usize, dim: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let trimmed = text.trim();
    trimmed
        .parse::<Rational>()
        .map_err(|_| ArithError::Parse(text.to_string()))
        .and_then(|r| {
            if trimmed.contains('/') && trimmed.ends_with("/0") {
                Err(ArithError::Parse(text.to_string()))
            } else {
                Ok(r)
            }
        })
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(value: &Rational) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn of_int(value: &BigInt) -> Sign {
        match value.sign() {
            num_bigint::Sign::Plus => Sign::Plus,
            num_bigint::Sign::Minus => Sign::Minus,
            num_bigint::Sign::NoSign => Sign::Zero,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector by a positive factor into a primitive integer
/// vector (gcd of entries 1). The zero vector maps to the zero vector.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let lcm = common_denominator(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &gcd).collect()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to shape an empty matrix.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().cloned());
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        Self::new(rows, cols, values.iter().map(|&v| int(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Linear rank of the row space.
    pub fn rank(&self) -> usize {
        IntegerEchelon::of_rows(self).pivots.len()
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per free
    /// column, each scaled to a primitive integer vector.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        IntegerEchelon::of_rows(self).nullspace()
    }

    /// An `rows x (rows - rank)` matrix whose columns form a basis of the
    /// kernel of the transpose: `transpose(self) * K = 0`.
    pub fn kernel_basis(&self) -> Self {
        let basis = self.transpose().nullspace();
        let mut k = Self::zeros(self.rows, basis.len());
        for (c, v) in basis.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                k.set(r, c, x.clone());
            }
        }
        k
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        let echelon = IntegerEchelon::of_rows(self);
        if echelon.pivots.len() < self.rows {
            return Rational::zero();
        }
        let last = echelon.rows[self.rows - 1][self.cols - 1].clone();
        let mut det = Rational::new(last, echelon.row_scale.clone());
        if echelon.swaps % 2 == 1 {
            det = -det;
        }
        det
    }
}

/// Fraction-free echelon form of an integer scaling of a rational matrix.
struct IntegerEchelon {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
    pivots: Vec<usize>,
    swaps: usize,
    /// Product of the positive row scalings applied before elimination.
    row_scale: BigInt,
}

impl IntegerEchelon {
    fn of_rows(m: &RationalMatrix) -> Self {
        let mut row_scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows())
            .map(|r| {
                let lcm = common_denominator(m.row(r));
                row_scale *= &lcm;
                let scale = Rational::from_integer(lcm);
                m.row(r).iter().map(|v| (v * &scale).to_integer()).collect()
            })
            .collect();
        let cols = m.cols();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut prev = BigInt::one();
        let mut top = 0;
        for col in 0..cols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            if p != top {
                rows.swap(p, top);
                swaps += 1;
            }
            let (head, tail) = rows.split_at_mut(top + 1);
            let pivot_row = &head[top];
            let pivot = pivot_row[col].clone();
            for row in tail.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..cols {
                    let v = (&pivot * &row[j] - &factor * &pivot_row[j]) / &prev;
                    row[j] = v;
                }
                row[col] = BigInt::zero();
            }
            prev = pivot;
            pivots.push(col);
            top += 1;
        }
        Self {
            rows,
            cols,
            pivots,
            swaps,
            row_scale,
        }
    }

    fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (i, &p) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[i];
                    let mut acc = Rational::zero();
                    for j in p + 1..self.cols {
                        if !row[j].is_zero() && !x[j].is_zero() {
                            acc += Rational::from_integer(row[j].clone()) * &x[j];
                        }
                    }
                    x[p] = -acc / Rational::from_integer(row[p].clone());
                }
                primitive_integer_vector(&x)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect()
            })
            .collect()
    }
}

/// Solution set of a linear system `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    /// `point + span(directions)`; `directions` is empty for a unique solution.
    Affine(AffineFlat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFlat {
    pub point: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
}

impl AffineFlat {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn unique_point(&self) -> Option<&[Rational]> {
        self.directions.is_empty().then_some(self.point.as_slice())
    }
}

impl LinearSolution {
    pub fn unique(&self) -> Option<&[Rational]> {
        match self {
            LinearSolution::Affine(flat) => flat.unique_point(),
            LinearSolution::Inconsistent => None,
        }
    }

    pub fn flat(self) -> Option<AffineFlat> {
        match self {
            LinearSolution::Affine(flat) => Some(flat),
            LinearSolution::Inconsistent => None,
        }
    }
}

/// Rational Gauss-Jordan solve of `a x = b`.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> LinearSolution {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut rows: Vec<Vec<Rational>> = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, top);
        let inv = rows[top][col].recip();
        for v in rows[top].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        pivots.push(col);
        top += 1;
    }
    if rows[top..].iter().any(|row| !row[n].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut point = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        point[p] = rows[i][n].clone();
    }
    let directions = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut d = vec![Rational::zero(); n];
            d[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                d[p] = -rows[i][f].clone();
            }
            d
        })
        .collect();
    LinearSolution::Affine(AffineFlat { point, directions })
}

/// Affine rank (dimension of the affine hull plus one) of a point set; zero
/// for the empty set.
pub fn affine_rank(points: &[&[Rational]]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let dim = first.len();
    let rows: Vec<Vec<Rational>> = points.iter().map(|p| homogenize(p)).collect();
    RationalMatrix::from_rows(dim + 1, &rows).rank()
}

/// `(1, p)`.
pub fn homogenize(point: &[Rational]) -> Vec<Rational> {
    let mut v = Vec::with_capacity(point.len() + 1);
    v.push(Rational::one());
    v.extend(point.iter().cloned());
    v
}

/// Affine hyperplane `{x : normal . x = offset}` in canonical form: the normal
/// is a primitive integer vector whose first nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineHyperplane {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl AffineHyperplane {
    /// Canonicalizes `normal . x = offset`. Returns `None` for a zero normal.
    pub fn from_equation(normal: &[Rational], offset: &Rational) -> Option<Self> {
        let lcm = common_denominator(normal);
        let scaled: Vec<BigInt> = normal
            .iter()
            .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if gcd.is_zero() {
            return None;
        }
        let first_negative = scaled.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
        let divisor = if first_negative { -gcd } else { gcd };
        let normal: Vec<BigInt> = scaled.into_iter().map(|v| v / &divisor).collect();
        let offset = offset * Rational::new(lcm, divisor);
        Some(Self { normal, offset })
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn rational_normal(&self) -> Vec<Rational> {
        self.normal.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal . x - offset`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.normal.len(), "point dimension mismatch");
        let mut acc = -self.offset.clone();
        for (n, v) in self.normal.iter().zip(x) {
            if !n.is_zero() {
                acc += Rational::from_integer(n.clone()) * v;
            }
        }
        acc
    }

    pub fn side(&self, x: &[Rational]) -> Sign {
        Sign::of(&self.eval(x))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.eval(x).is_zero()
    }
}

impl fmt::Display for AffineHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.normal.iter().map(|v| v.to_string()).collect();
        write!(f, "({}) . x = {}", terms.join(", "), self.offset)
    }
}

/// The canonical hyperplane through a point set that affinely spans a
/// hyperplane of its ambient space.
pub fn hyperplane_through(points: &[&[Rational]]) -> Result<AffineHyperplane, ArithError> {
    let Some(first) = points.first() else {
        return Err(ArithError::DegenerateSpan { rank: 0, dim: 0 });
    };
    let dim = first.len();
    let rows: Vec<Vec<Rational>> = points.iter().map(|p| homogenize(p)).collect();
    let m = RationalMatrix::from_rows(dim + 1, &rows);
    let rank = m.rank();
    if rank != dim || dim == 0 {
        return Err(ArithError::DegenerateSpan {
            rank: rank.saturating_sub(1),
            dim,
        });
    }
    let kernel = m.nullspace();
    debug_assert_eq!(kernel.len(), 1);
    let coeffs = &kernel[0];
    AffineHyperplane::from_equation(&coeffs[1..], &-coeffs[0].clone())
        .ok_or(ArithError::DegenerateSpan { rank: rank - 1, dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon_matrix() -> RationalMatrix {
        RationalMatrix::from_i64(
            5,
            3,
            &[1, 1, 0, 1, 0, 2, 1, -1, 1, 1, -1, 0, 1, 0, -1],
        )
    }

    fn pt(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| int(v)).collect()
    }

    /// Rank by plain rational Gaussian elimination, independent of Bareiss.
    fn rank_oracle(m: &RationalMatrix) -> usize {
        match solve_linear(m, &vec![Rational::zero(); m.rows()]) {
            LinearSolution::Affine(flat) => m.cols() - flat.dim(),
            LinearSolution::Inconsistent => unreachable!(),
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(pentagon_matrix().rank(), 3);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::from_i64(2, 2, &[1, 2, 1, 2]).rank(), 1);
        assert_eq!(RationalMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn kernel_of_pentagon_annihilates_and_has_rank_two() {
        let v = pentagon_matrix();
        let k = v.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (5, 2));
        assert!(v.transpose().mul(&k).is_zero());
        assert_eq!(k.rank(), 2);
        let reference = RationalMatrix::new(
            5,
            2,
            vec![
                rat(-1, 3),
                int(-1),
                rat(2, 3),
                int(1),
                rat(-4, 3),
                int(-1),
                int(1),
                int(0),
                int(0),
                int(1),
            ],
        );
        assert!(v.transpose().mul(&reference).is_zero());
    }

    #[test]
    fn kernel_edge_cases() {
        let k = RationalMatrix::identity(3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));
        let k = RationalMatrix::from_i64(2, 1, &[1, 1]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.get(0, 0), &-k.get(1, 0).clone());
        assert!(!k.get(0, 0).is_zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = RationalMatrix::from_i64(3, 3, &[2, -1, 0, 1, 3, 4, 0, 5, -2]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) = -52 - 2
        assert_eq!(m.determinant(), int(-54));
        let m = RationalMatrix::new(2, 2, vec![rat(1, 2), int(0), int(0), rat(1, 3)]);
        assert_eq!(m.determinant(), rat(1, 6));
        let m = RationalMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(m.determinant(), int(-1));
    }

    #[test]
    fn hyperplane_examples() {
        let pts = [pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
        let h = hyperplane_through(&refs).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(h.offset(), &int(1));

        let pts = [pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[0, -1, -1])];
        let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
        let h = hyperplane_through(&refs).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
        assert_eq!(h.offset(), &int(0));

        let pts = [pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])];
        let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
        let h = hyperplane_through(&refs).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(-1)]);
        assert_eq!(h.offset(), &int(0));
    }

    #[test]
    fn hyperplane_degenerate_spans() {
        let pts = [pt(&[0, 0, 0]), pt(&[1, 1, 1])];
        let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
        assert!(matches!(
            hyperplane_through(&refs),
            Err(ArithError::DegenerateSpan { .. })
        ));
        let pts = [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
        assert!(hyperplane_through(&refs).is_err());
    }

    #[test]
    fn canonical_form_fixes_scale_and_sign() {
        let h = AffineHyperplane::from_equation(&[rat(-2, 3), rat(4, 3)], &rat(2, 1)).unwrap();
        assert_eq!(h.normal(), &[BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(h.offset(), &int(-3));
        assert!(AffineHyperplane::from_equation(&[int(0), int(0)], &int(1)).is_none());
    }

    #[test]
    fn rational_round_trip_strings() {
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4").unwrap(), int(4));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn solve_reports_families_and_inconsistency() {
        let a = RationalMatrix::from_i64(2, 3, &[1, 0, 0, 0, 1, 0]);
        let sol = solve_linear(&a, &[int(1), int(2)]).flat().unwrap();
        assert_eq!(sol.point, vec![int(1), int(2), int(0)]);
        assert_eq!(sol.dim(), 1);
        let a = RationalMatrix::from_i64(2, 1, &[1, 1]);
        assert_eq!(solve_linear(&a, &[int(1), int(2)]), LinearSolution::Inconsistent);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = RationalMatrix> {
            (0usize..6, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |vals| {
                    RationalMatrix::new(r, c, vals.into_iter().map(|(n, d)| rat(n, d)).collect())
                })
            })
        }

        proptest! {
            #[test]
            fn kernel_annihilates_and_complements_rank(m in matrix()) {
                let k = m.kernel_basis();
                prop_assert!(m.transpose().mul(&k).is_zero());
                prop_assert_eq!(m.rank() + k.cols(), m.rows());
                prop_assert_eq!(k.rank(), k.cols());
            }

            #[test]
            fn bareiss_rank_agrees_with_gauss_jordan(m in matrix()) {
                prop_assert_eq!(m.rank(), rank_oracle(&m));
            }

            #[test]
            fn hyperplane_is_permutation_invariant(
                vals in proptest::collection::vec(-5i64..6, 9),
                perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
            ) {
                let pts: Vec<Vec<Rational>> = vals.chunks(3).map(pt).collect();
                let refs: Vec<&[Rational]> = pts.iter().map(Vec::as_slice).collect();
                let shuffled: Vec<&[Rational]> = perm.iter().map(|&i| refs[i]).collect();
                let a = hyperplane_through(&refs);
                let b = hyperplane_through(&shuffled);
                prop_assert_eq!(a.clone(), b);
                if let Ok(h) = a {
                    for p in &pts {
                        prop_assert!(h.contains(p));
                    }
                }
            }
        }
    }
}

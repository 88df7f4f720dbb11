//! Exact phase-one simplex over the rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{RationalMatrix, Rational};

/// Finds `x >= 0` with `a x >= b`, or `None` if no such point exists.
pub fn feasible_point(a: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m, "right-hand side length mismatch");

    // Columns: x (n), surplus (m), artificial (m), rhs.
    let width = n + 2 * m + 1;
    let rhs = width - 1;
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        let flip = b[i].is_negative();
        for (j, cell) in row.iter_mut().take(n).enumerate() {
            *cell = if flip { -a.get(i, j).clone() } else { a.get(i, j).clone() };
        }
        if flip {
            // -a x + s = -b with -b > 0: the surplus column is a valid basic variable.
            row[n + i] = Rational::one();
            row[rhs] = -b[i].clone();
            basis.push(n + i);
        } else {
            row[n + i] = -Rational::one();
            row[n + m + i] = Rational::one();
            row[rhs] = b[i].clone();
            basis.push(n + m + i);
        }
        tableau.push(row);
    }

    let is_artificial = |j: usize| j >= n + m && j < n + 2 * m;
    let cost = |j: usize| if is_artificial(j) { Rational::one() } else { Rational::zero() };

    loop {
        // Reduced costs c_j - c_B^T column_j.
        let entering = (0..rhs).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = cost(j);
            for (row, &bv) in tableau.iter().zip(&basis) {
                if is_artificial(bv) {
                    reduced -= &row[j];
                }
            }
            reduced.is_negative()
        });
        let Some(e) = entering else { break };

        let mut leaving: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tableau[i][e].is_positive() {
                continue;
            }
            let ratio = &tableau[i][rhs] / &tableau[i][e];
            let better = match &leaving {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (r, _) = leaving.expect("phase-one objective is bounded");
        pivot(&mut tableau, r, e);
        basis[r] = e;
    }

    let infeasibility: Rational = basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| is_artificial(bv))
        .map(|(i, _)| tableau[i][rhs].clone())
        .sum();
    if !infeasibility.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tableau[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(tableau: &mut [Vec<Rational>], r: usize, e: usize) {
    let inv = tableau[r][e].recip();
    for v in tableau[r].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tableau[r].clone();
    for (i, row) in tableau.iter_mut().enumerate() {
        if i == r || row[e].is_zero() {
            continue;
        }
        let factor = row[e].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{dot, int};

    fn check(a: &RationalMatrix, b: &[Rational], x: &[Rational]) {
        for (i, bi) in b.iter().enumerate().take(a.rows()) {
            assert!(dot(a.row(i), x) >= *bi, "row {i} violated");
        }
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn finds_point_in_simple_region() {
        // x + y >= 2, x - y >= -1, y >= 1/2
        let a = RationalMatrix::from_i64(3, 2, &[1, 1, 1, -1, 0, 1]);
        let b = vec![int(2), int(-1), Rational::new(1.into(), 2.into())];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn detects_infeasibility() {
        // x >= 2 and -x >= -1
        let a = RationalMatrix::from_i64(2, 1, &[1, -1]);
        assert!(feasible_point(&a, &[int(2), int(-1)]).is_none());
    }

    #[test]
    fn degenerate_system_terminates() {
        let a = RationalMatrix::from_i64(4, 2, &[1, 0, 0, 1, 1, 1, 1, -1]);
        let b = vec![int(0), int(0), int(0), int(0)];
        let x = feasible_point(&a, &b).unwrap();
        check(&a, &b, &x);
    }
}

//! Fourier–Motzkin elimination with strict inequalities.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `= 0`
    Eq,
    /// `>= 0`
    Ge,
    /// `> 0`
    Gt,
}

/// `coeffs . x + constant  (relation)  0`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, relation: Relation) -> Self {
        Self {
            coeffs,
            constant,
            relation,
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn constant_holds(&self) -> bool {
        match self.relation {
            Relation::Eq => self.constant.is_zero(),
            Relation::Ge => !self.constant.is_negative(),
            Relation::Gt => self.constant.is_positive(),
        }
    }

    /// Positive rescaling so the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.abs())
            .unwrap_or_else(|| {
                if self.constant.is_zero() {
                    Rational::from_integer(1.into())
                } else {
                    self.constant.abs()
                }
            });
        for c in self.coeffs.iter_mut() {
            *c /= &lead;
        }
        self.constant /= &lead;
        self
    }
}

/// Decides whether the system has a real (equivalently, rational) solution.
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), num_vars, "constraint width mismatch");
        if c.relation == Relation::Eq {
            equalities.push(c.clone());
        } else {
            inequalities.push(c.clone());
        }
    }

    // Substitute equalities away.
    while let Some(eq) = equalities.pop() {
        let Some(var) = eq.coeffs.iter().position(|c| !c.is_zero()) else {
            if !eq.constant.is_zero() {
                return false;
            }
            continue;
        };
        let pivot = eq.coeffs[var].clone();
        let substitute = |c: &mut Constraint| {
            if c.coeffs[var].is_zero() {
                return;
            }
            let factor = &c.coeffs[var] / &pivot;
            for (x, e) in c.coeffs.iter_mut().zip(&eq.coeffs) {
                *x -= &factor * e;
            }
            c.constant -= &factor * &eq.constant;
        };
        equalities.iter_mut().for_each(substitute);
        inequalities.iter_mut().for_each(substitute);
    }

    let mut system = dedupe(inequalities);
    for var in 0..num_vars {
        let (mut positive, mut negative, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in system {
            if c.coeffs[var].is_positive() {
                positive.push(c);
            } else if c.coeffs[var].is_negative() {
                negative.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &positive {
            for n in &negative {
                let a = p.coeffs[var].clone();
                let b = -n.coeffs[var].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| x * &b + y * &a)
                    .collect();
                let constant = &p.constant * &b + &n.constant * &a;
                let relation = if p.relation == Relation::Gt || n.relation == Relation::Gt {
                    Relation::Gt
                } else {
                    Relation::Ge
                };
                rest.push(Constraint::new(coeffs, constant, relation));
            }
        }
        system = match dedupe(rest) {
            s if s.iter().any(|c| c.is_constant() && !c.constant_holds()) => return false,
            s => s,
        };
    }
    system.iter().all(Constraint::constant_holds)
}

fn dedupe(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen: HashMap<(Vec<Rational>, Rational), usize> = HashMap::new();
    let mut out: Vec<Constraint> = Vec::new();
    for c in constraints {
        let c = c.normalized();
        if c.is_constant() && c.constant_holds() {
            continue;
        }
        let key = (c.coeffs.clone(), c.constant.clone());
        match seen.get(&key) {
            Some(&i) => {
                if c.relation == Relation::Gt {
                    out[i].relation = Relation::Gt;
                }
            }
            None => {
                seen.insert(key, out.len());
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn c(coeffs: &[i64], constant: i64, relation: Relation) -> Constraint {
        Constraint::new(coeffs.iter().map(|&v| int(v)).collect(), int(constant), relation)
    }

    #[test]
    fn strictness_matters_at_a_single_point() {
        // x >= 0 and -x >= 0 meet at 0; making one strict empties the set.
        assert!(feasible(1, &[c(&[1], 0, Relation::Ge), c(&[-1], 0, Relation::Ge)]));
        assert!(!feasible(1, &[c(&[1], 0, Relation::Gt), c(&[-1], 0, Relation::Ge)]));
    }

    #[test]
    fn equalities_restrict_to_a_line() {
        // x + y = 0 inside the open square |x|,|y| < 1: feasible.
        let square = [
            c(&[-1, 0], 1, Relation::Gt),
            c(&[1, 0], 1, Relation::Gt),
            c(&[0, -1], 1, Relation::Gt),
            c(&[0, 1], 1, Relation::Gt),
        ];
        let mut sys = square.to_vec();
        sys.push(c(&[1, 1], 0, Relation::Eq));
        assert!(feasible(2, &sys));
        // x + y = 2 only touches the closed square at a corner.
        let mut sys = square.to_vec();
        sys.push(c(&[1, 1], -2, Relation::Eq));
        assert!(!feasible(2, &sys));
    }

    #[test]
    fn inconsistent_equalities() {
        assert!(!feasible(
            1,
            &[c(&[1], -1, Relation::Eq), c(&[1], -2, Relation::Eq)]
        ));
    }
}

//! Phase-one simplex over exact rationals for `A x = b, x >= 0` with `b >= 0`.
//!
//! Every row gets an artificial variable; the artificial columns start as the
//! identity, so after any sequence of pivots they hold `B^-1`. When the
//! phase-one optimum is positive, `y = -c_B^T B^-1` satisfies `y^T A >= 0` and
//! `y^T b < 0`, which is the Farkas certificate.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, lowest-index
//! basic variable among ratio ties), so the run terminates and is reproducible.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// Equality system in standard form. Rows are deduplicated on insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSystem {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    seen: HashSet<(Vec<Rational>, Rational)>,
}

impl StandardSystem {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            rhs: Vec::new(),
            seen: HashSet::new(),
        }
    }

    /// Appends `row · x = rhs`; returns false if an identical row is already present.
    pub fn push_row(&mut self, row: Vec<Rational>, rhs: Rational) -> bool {
        assert_eq!(row.len(), self.cols);
        assert!(!rhs.is_negative(), "standard form needs rhs >= 0");
        if !self.seen.insert((row.clone(), rhs.clone())) {
            return false;
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        true
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// True iff `y^T A >= 0` componentwise and `y^T b < 0`.
    pub fn certifies_infeasibility(&self, y: &[Rational]) -> bool {
        if y.len() != self.rows.len() {
            return false;
        }
        let constant = y
            .iter()
            .zip(&self.rhs)
            .fold(Rational::zero(), |acc, (yi, bi)| acc + yi * bi);
        if !constant.is_negative() {
            return false;
        }
        (0..self.cols).all(|j| {
            let c = y
                .iter()
                .zip(&self.rows)
                .fold(Rational::zero(), |acc, (yi, row)| acc + yi * &row[j]);
            !c.is_negative()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// A basic feasible solution, one value per column.
    Feasible(Vec<Rational>),
    /// Farkas multipliers, one per row.
    Infeasible(Vec<Rational>),
}

pub fn solve(system: &StandardSystem) -> Outcome {
    let m = system.rows.len();
    let n = system.cols;
    if m == 0 {
        return Outcome::Feasible(vec![Rational::zero(); n]);
    }
    let width = n + m;
    // tableau[r] = [A | I] row r, rhs kept separately
    let mut tab: Vec<Vec<Rational>> = system
        .rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut t = row.clone();
            t.extend((0..m).map(|k| {
                if k == r {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }));
            t
        })
        .collect();
    let mut rhs = system.rhs.clone();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<Rational> = (0..width)
        .map(|j| {
            if j < n {
                -tab.iter().fold(Rational::zero(), |acc, row| acc + &row[j])
            } else {
                Rational::zero()
            }
        })
        .collect();
    let mut objective = rhs.iter().fold(Rational::zero(), |acc, b| acc + b);

    while !objective.is_zero() {
        // artificials never re-enter
        let Some(enter) = (0..n).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if tab[r][enter].is_positive() {
                let ratio = &rhs[r] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a positive entry always exists
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut rhs, &mut cost, &mut objective, pr, enter);
        basis[pr] = enter;
    }

    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (r, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] = rhs[r].clone();
            }
        }
        Outcome::Feasible(x)
    } else {
        // w_k = sum_r c_B[r] * (B^-1)[r][k]; y = -w
        let y = (0..m)
            .map(|k| {
                -basis
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b >= n)
                    .fold(Rational::zero(), |acc, (r, _)| acc + &tab[r][n + k])
            })
            .collect();
        Outcome::Infeasible(y)
    }
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    objective: &mut Rational,
    pr: usize,
    pc: usize,
) {
    let p = tab[pr][pc].clone();
    for v in tab[pr].iter_mut() {
        if !v.is_zero() {
            *v /= &p;
        }
    }
    rhs[pr] /= &p;
    let prow = tab[pr].clone();
    let prhs = rhs[pr].clone();
    for r in 0..tab.len() {
        if r == pr || tab[r][pc].is_zero() {
            continue;
        }
        let factor = tab[r][pc].clone();
        for (v, pv) in tab[r].iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
        rhs[r] -= &factor * &prhs;
    }
    if !cost[pc].is_zero() {
        let factor = cost[pc].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
        *objective += &factor * &prhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn system(rows: &[&[i64]], rhs: &[Rational]) -> StandardSystem {
        let mut s = StandardSystem::new(rows[0].len());
        for (row, b) in rows.iter().zip(rhs) {
            s.push_row(row.iter().map(|&v| int(v)).collect(), b.clone());
        }
        s
    }

    #[test]
    fn feasible_point_satisfies_rows() {
        let s = system(&[&[1, 1, 0], &[0, 1, 1]], &[int(1), int(2)]);
        let Outcome::Feasible(x) = solve(&s) else { panic!() };
        assert_eq!(&x[0] + &x[1], int(1));
        assert_eq!(&x[1] + &x[2], int(2));
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn infeasible_returns_certificate() {
        // x1 + x2 = 1/2 and x1 + x2 + s = 1/4 cannot both hold with s >= 0
        let s = system(&[&[1, 1, 0], &[1, 1, 1]], &[ratio(1, 2), ratio(1, 4)]);
        let Outcome::Infeasible(y) = solve(&s) else { panic!() };
        assert!(s.certifies_infeasibility(&y));
    }

    #[test]
    fn zero_row_with_positive_rhs() {
        let s = system(&[&[0, 0]], &[int(1)]);
        let Outcome::Infeasible(y) = solve(&s) else { panic!() };
        assert!(s.certifies_infeasibility(&y));
    }

    #[test]
    fn duplicate_rows_are_merged() {
        let mut s = StandardSystem::new(2);
        assert!(s.push_row(vec![int(1), int(0)], int(1)));
        assert!(!s.push_row(vec![int(1), int(0)], int(1)));
        assert_eq!(s.rows().len(), 1);
    }

    #[test]
    fn certificate_check_rejects_nonsense() {
        let s = system(&[&[1, 1]], &[int(1)]);
        assert!(!s.certifies_infeasibility(&[int(1)]));
        assert!(!s.certifies_infeasibility(&[int(-1)]));
        assert!(!s.certifies_infeasibility(&[]));
    }
}

//! Shared helpers for the integration tests, including a brute-force
//! feasibility oracle that shares no code with the simplex.

#![allow(dead_code)]

use exact1q::rational::{half, int};
use exact1q::{Mask, Rational, ReducedFn};
use num_traits::{Signed, Zero};

/// Solves `A x = b` by Gauss-Jordan elimination; `None` unless the columns of
/// `a` are linearly independent and the system is consistent.
fn independent_solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..cols {
        let p = (pivot_row..rows).find(|&r| !m[r][c].is_zero())?;
        m.swap(pivot_row, p);
        let inv = m[pivot_row][c].clone();
        for v in m[pivot_row].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[pivot_row].clone();
                for (v, p) in m[r].iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Feasibility of the reduced system by enumerating every basic solution:
/// the system has a non-negative solution iff some set of linearly
/// independent columns yields one.
pub fn brute_force_feasible(g: &ReducedFn) -> Option<Vec<Rational>> {
    let n = g.arity();
    // columns z_1..z_n, slack
    let mut a: Vec<Vec<Rational>> = g
        .support()
        .iter()
        .map(|&x| {
            let mut row: Vec<Rational> = (0..n).map(|i| int((x >> (n - 1 - i) & 1) as i64)).collect();
            row.push(int(0));
            row
        })
        .collect();
    a.push(vec![int(1); n + 1]);
    let mut b = vec![half(); g.support().len()];
    b.push(int(1));
    for subset in 1u32..(1 << (n + 1)) {
        let cols: Vec<usize> = (0..=n).filter(|&c| subset >> c & 1 == 1).collect();
        let sub: Vec<Vec<Rational>> = a.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        if let Some(x) = independent_solve(&sub, &b) {
            if x.iter().all(|v| !v.is_negative()) {
                let mut z = vec![int(0); n + 1];
                for (c, v) in cols.iter().zip(x) {
                    z[*c] = v;
                }
                z.truncate(n);
                return Some(z);
            }
        }
    }
    None
}

/// Support with index `s`: bit `j` of `s` selects mask `j + 1`.
pub fn support_from_index(n: usize, s: u64) -> ReducedFn {
    ReducedFn::new(
        n,
        (0..(1u32 << n) - 1).filter(|j| s >> j & 1 == 1).map(|j| j as Mask + 1),
    )
    .unwrap()
}

pub fn all_supports(n: usize) -> impl Iterator<Item = ReducedFn> {
    let total = (1u64 << ((1u64 << n) - 1)) - 1;
    (1..=total).map(move |s| support_from_index(n, s))
}

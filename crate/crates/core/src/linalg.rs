//! Gauss-Jordan elimination over exact rationals.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// Consistent with `cols - rank` free variables; `particular` sets them to 0.
    Underdetermined {
        particular: Vec<Rational>,
        rank: usize,
    },
    Inconsistent,
}

/// Solves `rows · x = rhs` where every row has `cols` entries.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> Solution {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let lead = m[rank][c].clone();
        for v in m[rank].iter_mut() {
            *v /= &lead;
        }
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Solution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    if rank == cols {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined { particular: x, rank }
    }
}

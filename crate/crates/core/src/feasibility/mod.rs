//! Exact feasibility of the 1-query linear systems.
//!
//! Two systems are solved here:
//!
//! * the reduced system for a [`ReducedFn`] with support `S`: variables
//!   `z_1..z_n` and a slack `z_0`, rows `sum_{i: x_i = 1} z_i = 1/2` for each
//!   `x` in `S` and `z_0 + z_1 + ... + z_n = 1`;
//! * the decision system for an arbitrary [`PartialBooleanFn`]: variables
//!   `z_0..z_n`, rows `z^T F(0) = 1` and `z^T F(a xor b) = 0` for every pair
//!   with `f(a) != f(b)`.
//!
//! Both are standard-form systems `A z = b, z >= 0` and are decided by the
//! phase-one simplex in [`simplex`]. An infeasible answer carries Farkas
//! multipliers, one per row of the standardized (deduplicated) system.

pub mod simplex;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::pbf::{bit, Mask, PartialBooleanFn};
use crate::rational::{self, half, int, Rational};
use crate::reduce::ReducedFn;
use crate::{Error, Result};

use simplex::{Outcome, StandardSystem};

/// Weights `z_1..z_n` and the slack `z_0 = 1 - sum z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    z0: Rational,
    z: Vec<Rational>,
}

impl WeightVector {
    /// Derives `z0 = 1 - sum z`.
    pub fn new(z: Vec<Rational>) -> Self {
        let z0 = rational::one() - rational::sum(&z);
        Self { z0, z }
    }

    /// Takes a possibly inconsistent `z0` as given; see [`Self::is_valid`].
    pub fn from_parts(z0: Rational, z: Vec<Rational>) -> Self {
        Self { z0, z }
    }

    pub fn from_strs(z: &[&str]) -> Result<Self> {
        Ok(Self::new(z.iter().map(|s| rational::parse(s)).collect::<Result<_>>()?))
    }

    pub fn z0(&self) -> &Rational {
        &self.z0
    }

    pub fn z(&self) -> &[Rational] {
        &self.z
    }

    pub fn arity(&self) -> usize {
        self.z.len()
    }

    /// Non-negative entries and `z0 = 1 - sum z >= 0`.
    pub fn is_valid(&self) -> bool {
        self.z.iter().all(|v| !v.is_negative())
            && !self.z0.is_negative()
            && self.z0 == rational::one() - rational::sum(&self.z)
    }

    /// `sum_{i: x_i = 1} z_i`.
    pub fn weight_of(&self, x: Mask) -> Rational {
        let n = self.z.len();
        (1..=n)
            .filter(|&i| bit(x, n, i))
            .fold(Rational::zero(), |acc, i| acc + &self.z[i - 1])
    }

    /// `z^T F(x)` over all `n + 1` entries.
    pub fn fourier_overlap(&self, x: Mask) -> Rational {
        let n = self.z.len();
        (1..=n).fold(self.z0.clone(), |acc, i| {
            if bit(x, n, i) {
                acc - &self.z[i - 1]
            } else {
                acc + &self.z[i - 1]
            }
        })
    }
}

/// Multipliers proving `A z = b, z >= 0` has no solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasWitness {
    pub multipliers: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible(WeightVector),
    Infeasible(FarkasWitness),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(_))
    }

    pub fn witness(&self) -> Option<&WeightVector> {
        match self {
            Self::Feasible(w) => Some(w),
            Self::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&FarkasWitness> {
        match self {
            Self::Feasible(_) => None,
            Self::Infeasible(c) => Some(c),
        }
    }
}

/// Row order: support masks ascending, then one `z_i = 0` row per fixed bit
/// (ascending), then the sum row. Columns: `z_1..z_n`, slack.
pub fn reduced_system(g: &ReducedFn, fixed: &BTreeSet<usize>) -> StandardSystem {
    let n = g.arity();
    let mut sys = StandardSystem::new(n + 1);
    for &x in g.support() {
        let mut row: Vec<Rational> = (1..=n).map(|i| int(bit(x, n, i) as i64)).collect();
        row.push(Rational::zero());
        sys.push_row(row, half());
    }
    for &i in fixed {
        let mut row = vec![Rational::zero(); n + 1];
        row[i - 1] = int(1);
        sys.push_row(row, Rational::zero());
    }
    sys.push_row(vec![int(1); n + 1], int(1));
    sys
}

/// Row order: `F(0)` first, then `F(a xor b)` in first-occurrence order over
/// zeros ascending × ones ascending. Columns: `z_0..z_n`.
pub fn decision_system(f: &PartialBooleanFn) -> StandardSystem {
    let n = f.arity();
    let mut sys = StandardSystem::new(n + 1);
    sys.push_row(vec![int(1); n + 1], int(1));
    for &a in f.zeros() {
        for &b in f.ones() {
            let entries = crate::pbf::sign_vector(a ^ b, n);
            sys.push_row(
                entries.entries().iter().map(|&s| int(s as i64)).collect(),
                Rational::zero(),
            );
        }
    }
    sys
}

fn check_fixed(n: usize, fixed: &BTreeSet<usize>) -> Result<()> {
    match fixed.iter().find(|&&i| i == 0 || i > n) {
        Some(i) => Err(Error::InvalidWitness(format!("bit index {i} outside 1..={n}"))),
        None => Ok(()),
    }
}

/// Decides `sum z_i <= 1` and `sum_{i: x_i=1} z_i = 1/2` for all `x` in the
/// support, over `z >= 0`.
pub fn decide_reduced(g: &ReducedFn) -> FeasibilityResult {
    decide_fixed(g, &BTreeSet::new())
}

/// As [`decide_reduced`] with the extra constraints `z_i = 0` for `i` in
/// `fixed` (1-based bit indices).
pub fn decide_with_fixed_zeros(g: &ReducedFn, fixed: &BTreeSet<usize>) -> Result<FeasibilityResult> {
    check_fixed(g.arity(), fixed)?;
    Ok(decide_fixed(g, fixed))
}

fn decide_fixed(g: &ReducedFn, fixed: &BTreeSet<usize>) -> FeasibilityResult {
    let n = g.arity();
    match simplex::solve(&reduced_system(g, fixed)) {
        Outcome::Feasible(x) => {
            let z = x[..n].to_vec();
            FeasibilityResult::Feasible(WeightVector::from_parts(x[n].clone(), z))
        }
        Outcome::Infeasible(y) => FeasibilityResult::Infeasible(FarkasWitness { multipliers: y }),
    }
}

/// Decides the general system for a non-constant `f`. The witness is given with
/// `z0` populated and `z^T F(d) = 0` on every xor-difference `d`.
pub fn decide(f: &PartialBooleanFn) -> Result<FeasibilityResult> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    Ok(match simplex::solve(&decision_system(f)) {
        Outcome::Feasible(x) => {
            let z0 = x[0].clone();
            FeasibilityResult::Feasible(WeightVector::from_parts(z0, x[1..].to_vec()))
        }
        Outcome::Infeasible(y) => FeasibilityResult::Infeasible(FarkasWitness { multipliers: y }),
    })
}

/// `|diff_set(f)| <= 2^(n-1)`. A `false` answer rules out exact 1-query
/// computability without solving anything.
pub fn precheck_bound(f: &PartialBooleanFn) -> Result<bool> {
    let d = f.diff_set()?;
    Ok((d.len() as u64) <= 1u64 << (f.arity() - 1))
}

/// Re-checks a result for `g` with exact arithmetic. Witnesses are checked
/// against the equations directly; certificates against the rebuilt system.
pub fn verify_result(g: &ReducedFn, r: &FeasibilityResult) -> bool {
    verify_result_with_fixed(g, &BTreeSet::new(), r)
}

pub fn verify_result_with_fixed(g: &ReducedFn, fixed: &BTreeSet<usize>, r: &FeasibilityResult) -> bool {
    if check_fixed(g.arity(), fixed).is_err() {
        return false;
    }
    match r {
        FeasibilityResult::Feasible(w) => {
            w.arity() == g.arity()
                && w.is_valid()
                && fixed.iter().all(|&i| w.z[i - 1].is_zero())
                && g.support().iter().all(|&x| rational::is_half(&w.weight_of(x)))
        }
        FeasibilityResult::Infeasible(c) => reduced_system(g, fixed).certifies_infeasibility(&c.multipliers),
    }
}

/// Re-checks a [`decide`] result for `f`.
pub fn verify_decision(f: &PartialBooleanFn, r: &FeasibilityResult) -> bool {
    if f.is_constant() {
        return false;
    }
    match r {
        FeasibilityResult::Feasible(w) => {
            let diffs: BTreeSet<Mask> = f
                .zeros()
                .iter()
                .flat_map(|a| f.ones().iter().map(move |b| a ^ b))
                .collect();
            w.arity() == f.arity() && w.is_valid() && diffs.iter().all(|&d| w.fourier_overlap(d).is_zero())
        }
        FeasibilityResult::Infeasible(c) => decision_system(f).certifies_infeasibility(&c.multipliers),
    }
}

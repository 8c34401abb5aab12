//! Every function computed by a grouped-weight 1-query algorithm.
//!
//! Bits are split into `p` contiguous groups `x_{k_{i-1}+1} .. x_{k_i}` that
//! all carry weight `a_i`. An input with per-group Hamming weights `m_i` must
//! output 1 exactly when `a_1 m_1 + ... + a_p m_p = 1/2`, so the computed
//! function is determined by the integer solutions `m` of that equation.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::feasibility::WeightVector;
use crate::pbf::{Mask, PartialBooleanFn};
use crate::rational::{self, half, int, Rational};
use crate::{Error, Result};

/// `(a_1..a_p, k_0..k_p)` with `0 = k_0 < k_1 < ... < k_p = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedWeightProfile {
    boundaries: Vec<usize>,
    values: Vec<Rational>,
}

impl GroupedWeightProfile {
    /// `boundaries` includes the leading 0.
    pub fn new(boundaries: Vec<usize>, values: Vec<Rational>) -> Result<Self> {
        if boundaries.len() < 2 || boundaries[0] != 0 {
            return Err(Error::InvalidProfile(
                "boundaries must start at 0 and name at least one group".into(),
            ));
        }
        if boundaries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile(format!(
                "boundaries {boundaries:?} are not strictly increasing"
            )));
        }
        let n = *boundaries.last().unwrap();
        if n > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(n));
        }
        if values.len() != boundaries.len() - 1 {
            return Err(Error::InvalidProfile(format!(
                "{} groups but {} weights",
                boundaries.len() - 1,
                values.len()
            )));
        }
        if let Some(a) = values.iter().find(|a| !a.is_positive()) {
            return Err(Error::InvalidProfile(format!(
                "weight {} is not positive",
                rational::format(a)
            )));
        }
        let profile = Self { boundaries, values };
        let total = profile.total_weight();
        if total < half() || total > int(1) {
            return Err(Error::InvalidProfile(format!(
                "total weight {} outside [1/2, 1]",
                rational::format(&total)
            )));
        }
        Ok(profile)
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn groups(&self) -> usize {
        self.values.len()
    }

    pub fn arity(&self) -> usize {
        *self.boundaries.last().unwrap()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `sum_i a_i (k_i - k_{i-1})`.
    pub fn total_weight(&self) -> Rational {
        self.values
            .iter()
            .zip(self.widths())
            .fold(Rational::zero(), |acc, (a, w)| acc + a * int(w as i64))
    }

    /// Per-bit weights `z_1..z_n`.
    pub fn expanded(&self) -> WeightVector {
        let z = self
            .values
            .iter()
            .zip(self.widths())
            .flat_map(|(a, w)| std::iter::repeat_n(a.clone(), w))
            .collect();
        WeightVector::new(z)
    }
}

/// Per-group Hamming weights `(m_1..m_p)` with `sum a_i m_i = 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LevelSolution(pub Vec<usize>);

/// All solutions in the box `m_i in 0..=width_i`, lexicographic order.
pub fn level_solutions(profile: &GroupedWeightProfile) -> Vec<LevelSolution> {
    let widths = profile.widths();
    let values = profile.values();
    // suffix_max[i] = largest contribution groups i.. can still add
    let mut suffix_max = vec![Rational::zero(); widths.len() + 1];
    for i in (0..widths.len()).rev() {
        suffix_max[i] = &suffix_max[i + 1] + &values[i] * int(widths[i] as i64);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(widths.len());
    search(values, &widths, &suffix_max, &half(), &mut current, &mut out);
    out
}

fn search(
    values: &[Rational],
    widths: &[usize],
    suffix_max: &[Rational],
    deficit: &Rational,
    current: &mut Vec<usize>,
    out: &mut Vec<LevelSolution>,
) {
    let i = current.len();
    if i == widths.len() {
        if deficit.is_zero() {
            out.push(LevelSolution(current.clone()));
        }
        return;
    }
    if suffix_max[i] < *deficit {
        return;
    }
    let mut remaining = deficit.clone();
    for m in 0..=widths[i] {
        if remaining.is_negative() {
            break;
        }
        current.push(m);
        search(values, widths, suffix_max, &remaining, current, out);
        current.pop();
        remaining -= &values[i];
    }
}

/// Values `v` in `0..2^width` with exactly `weight` set bits, ascending.
fn fixed_weight_values(width: usize, weight: usize) -> Vec<Mask> {
    if weight == 0 {
        return vec![0];
    }
    if weight > width {
        return vec![];
    }
    let limit = 1u64 << width;
    let mut out = Vec::new();
    let mut v: u64 = (1 << weight) - 1;
    while v < limit {
        out.push(v as Mask);
        // Gosper's hack: next integer with the same popcount
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// Ones = every input whose group weights form a level solution; zeros = {0}.
pub fn construct(profile: &GroupedWeightProfile) -> Result<PartialBooleanFn> {
    let solutions = level_solutions(profile);
    let n = profile.arity();
    let mut ones = Vec::new();
    for LevelSolution(m) in &solutions {
        let mut partial: Vec<Mask> = vec![0];
        for (g, &mi) in m.iter().enumerate() {
            let lo = profile.boundaries[g];
            let hi = profile.boundaries[g + 1];
            // group g sits at bit positions x_{lo+1}..x_{hi}, MSB-first
            let shift = n - hi;
            let values = fixed_weight_values(hi - lo, mi);
            partial = partial
                .iter()
                .flat_map(|&base| values.iter().map(move |&v| base | (v << shift)))
                .collect();
        }
        ones.extend(partial);
    }
    if ones.is_empty() {
        return Err(Error::EmptySupport);
    }
    PartialBooleanFn::new(n, ones, [0])
}

/// One function per level `c` in `ceil(n/2)..=n`: ones = all inputs of weight
/// `c`, zeros = {0}.
pub fn dj_family(n: usize) -> Result<Vec<PartialBooleanFn>> {
    if n == 0 || n > crate::MAX_ARITY {
        return Err(Error::ArityOutOfRange(n));
    }
    (n.div_ceil(2)..=n)
        .map(|c| PartialBooleanFn::new(n, fixed_weight_values(n, c), [0]))
        .collect()
}

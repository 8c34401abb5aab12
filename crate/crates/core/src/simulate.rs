//! Floating-point state-vector model of the 1-query algorithm.
//!
//! The state after the first unitary has amplitude `sqrt(z_i)` on query
//! position `i` (position 0 is the no-query slot). The oracle flips the sign of
//! position `i >= 1` when `x_i = 1`. The final measurement projects onto the
//! span of the post-oracle states of the zero inputs. This is independent of
//! the exact solver: it only uses the witness.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::feasibility::WeightVector;
use crate::pbf::{bit, Mask, PartialBooleanFn};
use crate::rational;
use crate::{Error, Result};

pub const SUCCESS_TOLERANCE: f64 = 1e-9;
pub const NORM_TOLERANCE: f64 = 1e-12;
pub const RANK_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn arity(&self) -> usize {
        self.amplitudes.len() - 1
    }

    pub fn norm_squared(&self) -> f64 {
        dot(&self.amplitudes, &self.amplitudes)
    }

    pub fn inner(&self, other: &StateVector) -> f64 {
        dot(&self.amplitudes, &other.amplitudes)
    }
}

/// Per-input `(P(output 0), P(output 1))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub per_input: BTreeMap<Mask, (f64, f64)>,
    pub min_success: f64,
}

pub fn prepare(z: &WeightVector) -> StateVector {
    let mut amplitudes = Vec::with_capacity(z.arity() + 1);
    amplitudes.push(rational::to_f64(z.z0()).max(0.0).sqrt());
    amplitudes.extend(z.z().iter().map(|v| rational::to_f64(v).max(0.0).sqrt()));
    StateVector { amplitudes }
}

pub fn apply_oracle(s: &StateVector, x: Mask) -> Result<StateVector> {
    let n = s.arity();
    if (x as u64) >> n != 0 {
        return Err(Error::ArityMismatch {
            expected: n,
            found: (u32::BITS - x.leading_zeros()) as usize,
        });
    }
    let mut amplitudes = s.amplitudes.clone();
    for (i, a) in amplitudes.iter_mut().enumerate().skip(1) {
        if bit(x, n, i) {
            *a = -*a;
        }
    }
    Ok(StateVector { amplitudes })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthonormal basis of the span of `vectors`: modified Gram-Schmidt, always
/// taking the remaining vector with the largest residual norm next.
fn orthonormal_basis(vectors: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut residual: Vec<Vec<f64>> = vectors.to_vec();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    while !residual.is_empty() {
        let (idx, norm) = residual
            .iter()
            .enumerate()
            .map(|(i, v)| (i, dot(v, v).sqrt()))
            .fold((0, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if norm <= RANK_TOLERANCE {
            break;
        }
        let q: Vec<f64> = residual.swap_remove(idx).iter().map(|v| v / norm).collect();
        for v in &mut residual {
            let c = dot(&q, v);
            for (vi, qi) in v.iter_mut().zip(&q) {
                *vi -= c * qi;
            }
        }
        basis.push(q);
    }
    basis
}

pub fn success_probabilities(f: &PartialBooleanFn, z: &WeightVector) -> Result<SimulationReport> {
    if z.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: z.arity(),
        });
    }
    if f.zeros().is_empty() {
        return Err(Error::DegenerateSpan);
    }
    let start = prepare(z);
    let zero_states: Vec<Vec<f64>> = f
        .zeros()
        .iter()
        .map(|&a| apply_oracle(&start, a).map(|s| s.amplitudes))
        .collect::<Result<_>>()?;
    let basis = orthonormal_basis(&zero_states);
    let mut per_input = BTreeMap::new();
    let mut min_success = f64::INFINITY;
    for x in f.domain() {
        let s = apply_oracle(&start, x)?;
        let p0: f64 = basis
            .iter()
            .map(|q| dot(q, &s.amplitudes).powi(2))
            .sum::<f64>()
            .clamp(0.0, 1.0);
        let p1 = 1.0 - p0;
        let success = if f.value(x) == Some(true) { p1 } else { p0 };
        min_success = min_success.min(success);
        per_input.insert(x, (p0, p1));
    }
    Ok(SimulationReport { per_input, min_success })
}

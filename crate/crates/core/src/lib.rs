//! Exact quantum 1-query complexity of partial Boolean functions.
//!
//! A partial Boolean function is computed by an exact quantum 1-query
//! algorithm iff a small linear system has a non-negative rational solution.
//! This crate decides that system exactly, reduces functions to the form that
//! outputs 0 only on the all-zeros input, reads off degree-1 polynomial
//! representations, constructs every function a grouped-weight algorithm
//! computes, classifies all reduced functions on few bits, and checks positive
//! answers with an independent state-vector simulation.
//!
//! Bit convention: `x_1` is the leftmost character of a bitstring and the most
//! significant bit of its mask, so `"1000"` at arity 4 is mask 8.

pub mod classify;
pub mod cli;
pub mod construct;
mod error;
pub mod feasibility;
pub mod json;
pub mod linalg;
pub mod pbf;
pub mod poly;
pub mod rational;
pub mod reduce;
pub mod simulate;

pub use error::{Error, Result};
pub use feasibility::{
    decide, decide_reduced, decide_with_fixed_zeros, precheck_bound, verify_decision, verify_result,
    verify_result_with_fixed, FarkasWitness, FeasibilityResult, WeightVector,
};
pub use pbf::{hamming_weight, sign_vector, Mask, PartialBooleanFn, SignVector, MAX_ARITY};
pub use poly::Degree1Polynomial;
pub use rational::Rational;
pub use reduce::{reduce, reduce_subset, ReducedFn};

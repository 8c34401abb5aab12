//! Degree-1 multilinear representations `p(x) = c_1 x_1 + ... + c_n x_n`.
//!
//! A reduced function is exactly 1-query computable iff it is represented by
//! such a `p` with `c_i >= 0` and `sum c_i <= 2`; the coefficients are twice a
//! feasibility witness.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::feasibility::{decide_reduced, WeightVector};
use crate::linalg::{self, Solution};
use crate::pbf::{bit, format_mask, Mask};
use crate::rational::{self, int, Rational};
use crate::reduce::ReducedFn;
use crate::{Error, Result};

/// Largest arity [`Degree1Polynomial::function_of`] will enumerate.
pub const FUNCTION_OF_MAX_ARITY: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Degree1Polynomial {
    #[serde(with = "rational::serde_vec")]
    coefficients: Vec<Rational>,
}

/// Partition of `{0,1}^n` induced by a polynomial: value 0, value 1, other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionClasses {
    pub arity: usize,
    pub zero: Vec<Mask>,
    pub one: Vec<Mask>,
    pub star: Vec<Mask>,
}

impl FunctionClasses {
    /// The reduced function supported on the one-class, if it is nonempty.
    pub fn reduced(&self) -> Option<ReducedFn> {
        ReducedFn::new(self.arity, self.one.iter().copied()).ok()
    }

    pub fn strings(v: &[Mask], arity: usize) -> Vec<String> {
        v.iter().map(|&x| format_mask(x, arity)).collect()
    }
}

impl Degree1Polynomial {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.len() > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(coefficients.len()));
        }
        Ok(Self { coefficients })
    }

    /// `c_i = 2 z_i`.
    pub fn from_witness(w: &WeightVector) -> Self {
        let two = int(2);
        Self {
            coefficients: w.z().iter().map(|z| z * &two).collect(),
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    /// `c >= 0` and `sum c <= 2`. The error names the first violated condition.
    pub fn check_form(&self) -> Result<()> {
        if let Some((i, c)) = self.coefficients.iter().enumerate().find(|(_, c)| c.is_negative()) {
            return Err(Error::InvalidForm(format!(
                "coefficient of x{} is {}, which is less than 0",
                i + 1,
                rational::format(c)
            )));
        }
        let total = rational::sum(&self.coefficients);
        if total > int(2) {
            return Err(Error::InvalidForm(format!(
                "coefficient sum {} exceeds 2",
                rational::format(&total)
            )));
        }
        Ok(())
    }

    pub fn eval(&self, x: Mask) -> Result<Rational> {
        let n = self.arity();
        if (x as u64) >> n != 0 {
            return Err(Error::ArityMismatch {
                expected: n,
                found: (u32::BITS - x.leading_zeros()) as usize,
            });
        }
        Ok((1..=n)
            .filter(|&i| bit(x, n, i))
            .fold(Rational::zero(), |acc, i| acc + &self.coefficients[i - 1]))
    }

    /// Enumerates `{0,1}^n` into the classes where `p = 0`, `p = 1`, and the rest.
    pub fn function_of(&self) -> Result<FunctionClasses> {
        self.check_form()?;
        let n = self.arity();
        if n > FUNCTION_OF_MAX_ARITY {
            return Err(Error::ArityTooLarge {
                n,
                limit: FUNCTION_OF_MAX_ARITY,
            });
        }
        let one = int(1);
        let mut classes = FunctionClasses {
            arity: n,
            zero: vec![],
            one: vec![],
            star: vec![],
        };
        for x in 0..(1u32 << n) {
            let v = self.eval(x)?;
            // zero-class is {0...0}; other inputs with p = 0 are stars
            if x == 0 {
                classes.zero.push(x);
            } else if v == one {
                classes.one.push(x);
            } else {
                classes.star.push(x);
            }
        }
        Ok(classes)
    }
}

/// The witness-derived polynomial for a feasible `g`.
pub fn represent(g: &ReducedFn) -> Result<Degree1Polynomial> {
    match decide_reduced(g).witness() {
        Some(w) => Ok(Degree1Polynomial::from_witness(w)),
        None => Err(Error::NotFeasible),
    }
}

/// The degree-1 polynomial with zero constant term that equals 1 on the
/// support, when it is unique (support rows of full column rank). Coefficient
/// signs are not restricted.
pub fn unique_representation(g: &ReducedFn) -> Option<Degree1Polynomial> {
    let n = g.arity();
    let rows: Vec<Vec<Rational>> = g
        .support()
        .iter()
        .map(|&x| (1..=n).map(|i| int(bit(x, n, i) as i64)).collect())
        .collect();
    let rhs = vec![int(1); rows.len()];
    match linalg::solve(&rows, &rhs, n) {
        Solution::Unique(c) => Some(Degree1Polynomial { coefficients: c }),
        _ => None,
    }
}

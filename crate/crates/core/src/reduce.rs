//! Reduction of a partial Boolean function to the canonical form that outputs
//! 0 exactly on the all-zeros input.

use std::collections::BTreeSet;

use crate::pbf::{check_mask, format_mask, permutation_map, Mask, PartialBooleanFn};
use crate::{Error, Result};

/// Value 0 at mask 0, value 1 on `support`, star elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedFn {
    arity: usize,
    support: Vec<Mask>,
}

impl ReducedFn {
    pub fn new(arity: usize, support: impl IntoIterator<Item = Mask>) -> Result<Self> {
        if arity == 0 || arity > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        let mut set = BTreeSet::new();
        for x in support {
            check_mask(x, arity)?;
            if x == 0 {
                return Err(Error::ZeroInSupport);
            }
            if !set.insert(x) {
                return Err(Error::Duplicate(format_mask(x, arity)));
            }
        }
        if set.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(Self {
            arity,
            support: set.into_iter().collect(),
        })
    }

    pub fn from_strs(support: &[&str]) -> Result<Self> {
        let arity = support.first().map(|s| s.len()).ok_or(Error::EmptySupport)?;
        let masks = support
            .iter()
            .map(|s| crate::pbf::parse_mask(s, arity))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, masks)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Sorted ascending.
    pub fn support(&self) -> &[Mask] {
        &self.support
    }

    pub fn to_partial(&self) -> PartialBooleanFn {
        PartialBooleanFn::new(self.arity, self.support.iter().copied(), [0])
            .expect("reduced form is a valid partial function")
    }

    pub fn permute_bits(&self, perm: &[usize]) -> Result<Self> {
        let map = permutation_map(perm, self.arity)?;
        let mut support: Vec<Mask> = self.support.iter().map(|&x| map(x)).collect();
        support.sort_unstable();
        Ok(Self {
            arity: self.arity,
            support,
        })
    }

    pub fn is_subset_of(&self, other: &ReducedFn) -> bool {
        self.arity == other.arity && self.support.iter().all(|x| other.support.binary_search(x).is_ok())
    }

    pub fn support_strings(&self) -> Vec<String> {
        self.support.iter().map(|&x| format_mask(x, self.arity)).collect()
    }
}

/// Support = the xor-difference set of `f`. Decision answers are preserved in
/// both directions.
pub fn reduce(f: &PartialBooleanFn) -> Result<ReducedFn> {
    let support = f.diff_set()?;
    Ok(ReducedFn {
        arity: f.arity(),
        support,
    })
}

/// Support = a nonempty subset of the xor-difference set. Any witness for `f`
/// also works for the result; the converse need not hold.
pub fn reduce_subset(f: &PartialBooleanFn, subset: impl IntoIterator<Item = Mask>) -> Result<ReducedFn> {
    let diff = f.diff_set()?;
    let subset: BTreeSet<Mask> = subset.into_iter().collect();
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&x) = subset.iter().find(|x| diff.binary_search(x).is_err()) {
        return Err(Error::NotASubset(format_mask(x, f.arity())));
    }
    Ok(ReducedFn {
        arity: f.arity(),
        support: subset.into_iter().collect(),
    })
}

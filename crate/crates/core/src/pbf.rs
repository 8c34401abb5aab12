//! Partial Boolean functions and the elementary bit operations on their inputs.

use std::collections::BTreeSet;

use crate::{Error, Result};

/// Largest supported arity. Masks are stored as `u32`.
pub const MAX_ARITY: usize = 24;

/// An input assignment. Bit `x_1` is the most significant of the `n` bits.
pub type Mask = u32;

pub fn hamming_weight(x: Mask) -> u32 {
    x.count_ones()
}

/// Value of bit `x_i` (1-based) of `x` at the given arity.
pub fn bit(x: Mask, arity: usize, i: usize) -> bool {
    debug_assert!((1..=arity).contains(&i));
    (x >> (arity - i)) & 1 == 1
}

pub fn check_mask(x: Mask, arity: usize) -> Result<()> {
    if (x as u64) >> arity != 0 {
        return Err(Error::MaskOutOfRange { mask: x, arity });
    }
    Ok(())
}

pub fn format_mask(x: Mask, arity: usize) -> String {
    (1..=arity).map(|i| if bit(x, arity, i) { '1' } else { '0' }).collect()
}

/// Parses an `n`-character string over `{0,1}`.
pub fn parse_mask(s: &str, arity: usize) -> Result<Mask> {
    if s.len() != arity || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::Parse(format!("{s:?} is not a {arity}-character bitstring")));
    }
    Ok(s.bytes().fold(0, |acc, b| (acc << 1) | (b - b'0') as Mask))
}

/// `F(x) = (1, (-1)^{x_1}, ..., (-1)^{x_n})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn entries(&self) -> &[i8] {
        &self.0
    }
}

pub fn sign_vector(x: Mask, arity: usize) -> SignVector {
    let mut entries = Vec::with_capacity(arity + 1);
    entries.push(1);
    entries.extend((1..=arity).map(|i| if bit(x, arity, i) { -1 } else { 1 }));
    SignVector(entries)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// A promise function on `n` bits given by disjoint 0-inputs and 1-inputs.
/// Every other input is a star.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialBooleanFn {
    arity: usize,
    ones: Vec<Mask>,
    zeros: Vec<Mask>,
}

impl PartialBooleanFn {
    pub fn new(
        arity: usize,
        ones: impl IntoIterator<Item = Mask>,
        zeros: impl IntoIterator<Item = Mask>,
    ) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        let collect = |it: &mut dyn Iterator<Item = Mask>| -> Result<Vec<Mask>> {
            let mut seen = BTreeSet::new();
            for x in it {
                check_mask(x, arity)?;
                if !seen.insert(x) {
                    return Err(Error::Duplicate(format_mask(x, arity)));
                }
            }
            Ok(seen.into_iter().collect())
        };
        let ones = collect(&mut ones.into_iter())?;
        let zeros = collect(&mut zeros.into_iter())?;
        if let Some(x) = ones.iter().find(|x| zeros.binary_search(x).is_ok()) {
            return Err(Error::Overlap(format_mask(*x, arity)));
        }
        Ok(Self { arity, ones, zeros })
    }

    /// Builds a function from bitstrings, e.g. `from_strs(&["110"], &["000"])`.
    pub fn from_strs(ones: &[&str], zeros: &[&str]) -> Result<Self> {
        let arity = ones
            .iter()
            .chain(zeros)
            .map(|s| s.len())
            .next()
            .ok_or(Error::ArityOutOfRange(0))?;
        let parse = |v: &[&str]| v.iter().map(|s| parse_mask(s, arity)).collect::<Result<Vec<_>>>();
        Self::new(arity, parse(ones)?, parse(zeros)?)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Sorted ascending.
    pub fn ones(&self) -> &[Mask] {
        &self.ones
    }

    /// Sorted ascending.
    pub fn zeros(&self) -> &[Mask] {
        &self.zeros
    }

    /// `Some(value)` on the domain, `None` on a star.
    pub fn value(&self, x: Mask) -> Option<bool> {
        if self.ones.binary_search(&x).is_ok() {
            Some(true)
        } else if self.zeros.binary_search(&x).is_ok() {
            Some(false)
        } else {
            None
        }
    }

    /// Domain `D = ones ∪ zeros`, sorted.
    pub fn domain(&self) -> Vec<Mask> {
        let mut d: Vec<Mask> = self.ones.iter().chain(&self.zeros).copied().collect();
        d.sort_unstable();
        d
    }

    pub fn is_constant(&self) -> bool {
        self.ones.is_empty() || self.zeros.is_empty()
    }

    /// The same domain with output values exchanged.
    pub fn negated(&self) -> Self {
        Self {
            arity: self.arity,
            ones: self.zeros.clone(),
            zeros: self.ones.clone(),
        }
    }

    /// `{a ⊕ b : f(a) = 0, f(b) = 1}`, sorted.
    pub fn diff_set(&self) -> Result<Vec<Mask>> {
        if self.is_constant() {
            return Err(Error::ConstantFunction);
        }
        let set: BTreeSet<Mask> = self
            .zeros
            .iter()
            .flat_map(|a| self.ones.iter().map(move |b| a ^ b))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Equal Hamming weights get equal values, and each weight level is either
    /// entirely inside the domain or entirely outside it.
    pub fn is_symmetric(&self) -> bool {
        let n = self.arity;
        let mut ones = vec![0u64; n + 1];
        let mut zeros = vec![0u64; n + 1];
        for &x in &self.ones {
            ones[hamming_weight(x) as usize] += 1;
        }
        for &x in &self.zeros {
            zeros[hamming_weight(x) as usize] += 1;
        }
        (0..=n).all(|w| {
            let defined = ones[w] + zeros[w];
            (ones[w] == 0 || zeros[w] == 0) && (defined == 0 || defined == binomial(n, w))
        })
    }

    /// Relabels bits: bit `perm[i-1]` of the image equals bit `i` of the
    /// preimage. `perm` lists 1-based positions.
    pub fn permute_bits(&self, perm: &[usize]) -> Result<Self> {
        let map = permutation_map(perm, self.arity)?;
        let apply = |v: &[Mask]| {
            let mut out: Vec<Mask> = v.iter().map(|&x| map(x)).collect();
            out.sort_unstable();
            out
        };
        Ok(Self {
            arity: self.arity,
            ones: apply(&self.ones),
            zeros: apply(&self.zeros),
        })
    }
}

/// Validates `perm` and returns the induced map on masks.
pub(crate) fn permutation_map(perm: &[usize], arity: usize) -> Result<impl Fn(Mask) -> Mask> {
    if perm.len() != arity {
        return Err(Error::InvalidPermutation(format!(
            "length {} for arity {arity}",
            perm.len()
        )));
    }
    let mut seen = vec![false; arity + 1];
    for &p in perm {
        if p == 0 || p > arity || seen[p] {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection on 1..={arity}"
            )));
        }
        seen[p] = true;
    }
    let perm = perm.to_vec();
    Ok(move |x: Mask| {
        (1..=arity)
            .filter(|&i| bit(x, arity, i))
            .fold(0, |acc, i| acc | 1 << (arity - perm[i - 1]))
    })
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

pub fn inverse_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p - 1] = i + 1;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Mask {
        parse_mask(s, s.len()).unwrap()
    }

    #[test]
    fn msb_first_convention() {
        assert_eq!(m("1000"), 8);
        assert_eq!(format_mask(8, 4), "1000");
        assert!(bit(m("100"), 3, 1));
        assert!(!bit(m("100"), 3, 3));
    }

    #[test]
    fn hamming_weights() {
        assert_eq!(hamming_weight(m("0000")), 0);
        assert_eq!(hamming_weight(m("0111")), 3);
        assert_eq!(hamming_weight(m("110110")), 4);
    }

    #[test]
    fn sign_vectors() {
        assert_eq!(sign_vector(m("00"), 2).entries(), &[1, 1, 1]);
        assert_eq!(sign_vector(m("10"), 2).entries(), &[1, -1, 1]);
        assert_eq!(sign_vector(m("111"), 3).entries(), &[1, -1, -1, -1]);
    }

    #[test]
    fn diff_sets() {
        // Deutsch's function (f(00), f(01), f(10), f(11)) = (1, 0, 0, 1)
        let deutsch = PartialBooleanFn::from_strs(&["00", "11"], &["01", "10"]).unwrap();
        assert_eq!(deutsch.diff_set().unwrap(), vec![m("01"), m("10")]);

        let f = PartialBooleanFn::from_strs(&["1100", "0011"], &["0000"]).unwrap();
        assert_eq!(f.diff_set().unwrap(), vec![m("0011"), m("1100")]);

        let g = PartialBooleanFn::from_strs(&["01", "10"], &["00", "11"]).unwrap();
        assert_eq!(g.diff_set().unwrap(), vec![m("01"), m("10")]);
    }

    #[test]
    fn constant_has_no_diff_set() {
        let c = PartialBooleanFn::from_strs(&["00", "11"], &[]).unwrap();
        assert_eq!(c.diff_set(), Err(Error::ConstantFunction));
    }

    #[test]
    fn symmetry() {
        let sym = PartialBooleanFn::from_strs(&["110", "101", "011"], &["000"]).unwrap();
        assert!(sym.is_symmetric());
        let split = PartialBooleanFn::from_strs(&["1100", "1010", "1001", "0111"], &["0000"]).unwrap();
        assert!(!split.is_symmetric());
        let vacuous = PartialBooleanFn::new(4, [], [0]).unwrap();
        assert!(vacuous.is_symmetric());
        // full level with mixed values
        let mixed = PartialBooleanFn::from_strs(&["01"], &["10"]).unwrap();
        assert!(!mixed.is_symmetric());
    }

    #[test]
    fn permutations() {
        let f = PartialBooleanFn::from_strs(&["100"], &["000"]).unwrap();
        assert_eq!(f.permute_bits(&[1, 2, 3]).unwrap(), f);
        let swapped = f.permute_bits(&[3, 2, 1]).unwrap();
        assert_eq!(swapped.ones(), &[m("001")]);
        let perm = [2, 3, 1];
        let g = PartialBooleanFn::from_strs(&["110", "100"], &["011"]).unwrap();
        let back = g
            .permute_bits(&perm)
            .unwrap()
            .permute_bits(&inverse_permutation(&perm))
            .unwrap();
        assert_eq!(back, g);
        assert!(matches!(f.permute_bits(&[1, 1, 2]), Err(Error::InvalidPermutation(_))));
        assert!(matches!(f.permute_bits(&[1, 2]), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PartialBooleanFn::new(2, [1], [1]), Err(Error::Overlap("01".into())));
        assert_eq!(
            PartialBooleanFn::new(2, [1, 1], [0]),
            Err(Error::Duplicate("01".into()))
        );
        assert!(matches!(
            PartialBooleanFn::new(2, [4], [0]),
            Err(Error::MaskOutOfRange { .. })
        ));
        assert_eq!(PartialBooleanFn::new(0, [], []), Err(Error::ArityOutOfRange(0)));
        assert_eq!(PartialBooleanFn::new(25, [], []), Err(Error::ArityOutOfRange(25)));
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(all_permutations(3).len(), 6);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1), vec![vec![1]]);
    }
}

//! Exhaustive classification of reduced functions on few bits.
//!
//! Full mode decides every nonempty support `S ⊆ {0,1}^n \ {0}` (n <= 4).
//! Witness-first mode (n = 5) only produces maximal feasible supports: each is
//! the one-class `{x : z·x = 1/2}` of a vertex `z` of its feasibility
//! polytope, and every vertex is cut out by `n` independent tight constraints
//! among `x·z = 1/2`, `z_i = 0` and `sum z = 1`.

pub mod tables;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::feasibility::{decide_reduced, decide_with_fixed_zeros, WeightVector};
use crate::linalg::{self, Solution};
use crate::pbf::{all_permutations, bit, format_mask, hamming_weight, permutation_map, Mask};
use crate::rational::{self, half, int, Rational};
use crate::reduce::ReducedFn;
use crate::{Error, Result};

/// Largest arity for full-subset enumeration.
pub const FULL_MODE_MAX_ARITY: usize = 4;
/// Largest arity for any enumeration.
pub const MAX_CLASSIFY_ARITY: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every nonempty support.
    Full,
    /// Maximal feasible supports only, found from polytope vertices.
    WitnessFirst,
}

impl Mode {
    pub fn for_arity(n: usize) -> Result<Self> {
        match n {
            1..=FULL_MODE_MAX_ARITY => Ok(Mode::Full),
            5 => Ok(Mode::WitnessFirst),
            _ => Err(Error::ArityTooLarge {
                n,
                limit: MAX_CLASSIFY_ARITY,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub symmetric: bool,
    /// Some single `z_i` can be zero in a feasible solution.
    pub fewer_bits: bool,
    /// Support lies in one Hamming level `c` with `ceil(n/2) <= c <= n`.
    pub dj_computable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub arity: usize,
    pub support: Vec<Mask>,
    pub feasible: bool,
    pub witness: Option<WeightVector>,
    pub flags: Flags,
    pub maximal: bool,
    /// A maximal feasible strict superset, for feasible non-maximal records.
    pub included_by: Option<Vec<Mask>>,
}

impl ClassificationRecord {
    pub fn non_trivial(&self) -> bool {
        self.feasible && !self.flags.fewer_bits && !self.flags.symmetric && !self.flags.dj_computable
    }

    pub fn key(&self) -> u64 {
        support_key(&self.support)
    }

    pub fn reduced(&self) -> ReducedFn {
        ReducedFn::new(self.arity, self.support.iter().copied()).expect("record support is valid")
    }

    pub fn support_strings(&self) -> Vec<String> {
        self.support.iter().map(|&x| format_mask(x, self.arity)).collect()
    }
}

/// Characteristic bitset of a support: bit `m` set for each mask `m`.
pub fn support_key(support: &[Mask]) -> u64 {
    support.iter().fold(0, |acc, &m| acc | 1u64 << m)
}

pub fn fewer_bits(g: &ReducedFn) -> bool {
    (1..=g.arity()).any(|i| {
        decide_with_fixed_zeros(g, &BTreeSet::from([i]))
            .expect("index in range")
            .is_feasible()
    })
}

/// Smallest number of bits some feasible witness leaves nonzero, or `None`
/// when `g` is infeasible.
pub fn essential_bits(g: &ReducedFn) -> Option<usize> {
    let n = g.arity();
    (0u32..(1 << n))
        .filter(|fixed| {
            let set: BTreeSet<usize> = (1..=n).filter(|&i| bit(*fixed, n, i)).collect();
            decide_with_fixed_zeros(g, &set)
                .expect("indices in range")
                .is_feasible()
        })
        .map(|fixed| n - fixed.count_ones() as usize)
        .min()
}

pub fn dj_computable(g: &ReducedFn) -> bool {
    let n = g.arity() as u32;
    let c = hamming_weight(g.support()[0]);
    c >= n.div_ceil(2) && g.support().iter().all(|&x| hamming_weight(x) == c)
}

/// Record for one support with every flag except `maximal`/`included_by`.
pub fn classify_support(g: &ReducedFn) -> ClassificationRecord {
    let result = decide_reduced(g);
    let feasible = result.is_feasible();
    ClassificationRecord {
        arity: g.arity(),
        support: g.support().to_vec(),
        feasible,
        witness: result.witness().cloned(),
        flags: Flags {
            symmetric: g.to_partial().is_symmetric(),
            fewer_bits: feasible && fewer_bits(g),
            dj_computable: dj_computable(g),
        },
        maximal: false,
        included_by: None,
    }
}

fn support_count(n: usize) -> u64 {
    (1u64 << ((1u64 << n) - 1)) - 1
}

/// Masks of the support with index `s` (bit `j` ↔ mask `j + 1`).
fn support_of(s: u64) -> Vec<Mask> {
    (0..63).filter(|j| s >> j & 1 == 1).map(|j| j as Mask + 1).collect()
}

/// Contiguous slice `shard` of `shards` of the full enumeration, without
/// maximality information.
pub fn enumerate_shard(n: usize, shard: usize, shards: usize) -> Result<Vec<ClassificationRecord>> {
    if Mode::for_arity(n)? != Mode::Full {
        return Err(Error::ArityTooLarge {
            n,
            limit: FULL_MODE_MAX_ARITY,
        });
    }
    assert!(shards > 0 && shard < shards, "shard index must be below shard count");
    let total = support_count(n);
    let lo = 1 + total * shard as u64 / shards as u64;
    let hi = 1 + total * (shard as u64 + 1) / shards as u64;
    Ok((lo..hi)
        .map(|s| classify_support(&ReducedFn::new(n, support_of(s)).expect("valid support")))
        .collect())
}

/// Every record for `n`, sorted by support key, computed on `workers` threads.
/// In witness-first mode only maximal records are produced.
pub fn enumerate_reduced_with_workers(n: usize, workers: usize) -> Result<Vec<ClassificationRecord>> {
    let workers = workers.max(1);
    match Mode::for_arity(n)? {
        Mode::Full => {
            let shards: Vec<Vec<ClassificationRecord>> = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|w| scope.spawn(move || enumerate_shard(n, w, workers)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .collect::<Result<_>>()
            })?;
            let mut records: Vec<ClassificationRecord> = shards.into_iter().flatten().collect();
            mark_maximal(&mut records);
            Ok(records)
        }
        Mode::WitnessFirst => {
            let supports = maximal_by_vertices(n, workers)?;
            let mut records: Vec<ClassificationRecord> = parallel_map(&supports, workers, classify_support);
            for r in &mut records {
                r.maximal = true;
            }
            Ok(records)
        }
    }
}

pub fn enumerate_reduced(n: usize) -> Result<Vec<ClassificationRecord>> {
    enumerate_reduced_with_workers(n, 1)
}

/// Fills `maximal` and `included_by` on a full, key-sorted enumeration.
fn mark_maximal(records: &mut [ClassificationRecord]) {
    // records[s - 1] holds support index s
    let feasible: Vec<bool> = records.iter().map(|r| r.feasible).collect();
    let is_feasible = |s: u64| feasible[(s - 1) as usize];
    let slots = match records.first() {
        Some(r) => (1u64 << r.arity) - 1,
        None => return,
    };
    let grow = |s: u64| (0..slots).find(|&j| s >> j & 1 == 0 && is_feasible(s | 1 << j));
    for (idx, record) in records.iter_mut().enumerate() {
        if !record.feasible {
            continue;
        }
        let s = idx as u64 + 1;
        match grow(s) {
            None => record.maximal = true,
            Some(_) => {
                let mut top = s;
                while let Some(j) = grow(top) {
                    top |= 1 << j;
                }
                record.included_by = Some(support_of(top));
            }
        }
    }
}

pub fn maximal_feasible_with_workers(n: usize, workers: usize) -> Result<Vec<ClassificationRecord>> {
    Ok(enumerate_reduced_with_workers(n, workers)?
        .into_iter()
        .filter(|r| r.maximal)
        .collect())
}

pub fn maximal_feasible(n: usize) -> Result<Vec<ClassificationRecord>> {
    maximal_feasible_with_workers(n, 1)
}

/// Maximal feasible records that are non-trivial.
pub fn nontrivial_catalog_with_workers(n: usize, workers: usize) -> Result<Vec<ClassificationRecord>> {
    Ok(maximal_feasible_with_workers(n, workers)?
        .into_iter()
        .filter(|r| r.non_trivial())
        .collect())
}

pub fn nontrivial_catalog(n: usize) -> Result<Vec<ClassificationRecord>> {
    nontrivial_catalog_with_workers(n, 1)
}

/// Smallest support key over all bit permutations of `support`.
pub fn orbit_key(support: &[Mask], n: usize) -> u64 {
    all_permutations(n)
        .iter()
        .map(|p| {
            let map = permutation_map(p, n).expect("valid permutation");
            support.iter().fold(0u64, |acc, &x| acc | 1 << map(x))
        })
        .min()
        .unwrap_or(0)
}

/// Groups supports by bit-permutation orbit; orbits ordered by key, members in
/// input order.
pub fn group_by_orbit(records: &[ClassificationRecord]) -> Vec<Vec<&ClassificationRecord>> {
    let mut orbits: BTreeMap<u64, Vec<&ClassificationRecord>> = BTreeMap::new();
    for r in records {
        orbits.entry(orbit_key(&r.support, r.arity)).or_default().push(r);
    }
    orbits.into_values().collect()
}

fn parallel_map<T: Sync, U: Send>(items: &[T], workers: usize, f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let chunk = items.len().div_ceil(workers.max(1)).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                scope.spawn(move || c.iter().map(f).collect::<Vec<U>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Maximal feasible supports from polytope vertices, sorted by key.
pub fn maximal_by_vertices(n: usize, workers: usize) -> Result<Vec<ReducedFn>> {
    if n == 0 || n > MAX_CLASSIFY_ARITY {
        return Err(Error::ArityTooLarge {
            n,
            limit: MAX_CLASSIFY_ARITY,
        });
    }
    let mut constraints: Vec<(Vec<Rational>, Rational)> = (1u32..1 << n)
        .map(|x| ((1..=n).map(|i| int(bit(x, n, i) as i64)).collect(), half()))
        .collect();
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        row[i] = int(1);
        constraints.push((row, Rational::zero()));
    }
    constraints.push((vec![int(1); n], int(1)));

    let firsts: Vec<usize> = (0..constraints.len()).collect();
    let found: Vec<BTreeSet<Vec<Mask>>> = parallel_map(&firsts, workers, |&first| {
        let mut out = BTreeSet::new();
        let mut chosen = vec![first];
        vertices_from(&constraints, n, &mut chosen, &mut out);
        out
    });
    let candidates: BTreeSet<Vec<Mask>> = found.into_iter().flatten().collect();
    let keys: Vec<u64> = candidates.iter().map(|s| support_key(s)).collect();
    let mut maximal: Vec<(u64, &Vec<Mask>)> = candidates
        .iter()
        .zip(&keys)
        .filter(|(_, &k)| !keys.iter().any(|&o| o != k && o & k == k))
        .map(|(s, &k)| (k, s))
        .collect();
    maximal.sort();
    maximal
        .into_iter()
        .map(|(_, s)| ReducedFn::new(n, s.iter().copied()))
        .collect()
}

fn vertices_from(
    constraints: &[(Vec<Rational>, Rational)],
    n: usize,
    chosen: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<Mask>>,
) {
    if chosen.len() == n {
        let rows: Vec<Vec<Rational>> = chosen.iter().map(|&c| constraints[c].0.clone()).collect();
        let rhs: Vec<Rational> = chosen.iter().map(|&c| constraints[c].1.clone()).collect();
        if let Solution::Unique(z) = linalg::solve(&rows, &rhs, n) {
            if z.iter().all(|v| !v.is_negative()) && rational::sum(&z) <= int(1) {
                let w = WeightVector::new(z);
                let one_class: Vec<Mask> = (1u32..1 << n).filter(|&x| rational::is_half(&w.weight_of(x))).collect();
                if !one_class.is_empty() {
                    out.insert(one_class);
                }
            }
        }
        return;
    }
    let start = *chosen.last().unwrap() + 1;
    for c in start..constraints.len() {
        chosen.push(c);
        vertices_from(constraints, n, chosen, out);
        chosen.pop();
    }
}

/// CSV with columns support, feasible, witness, symmetric, fewer_bits,
/// dj_computable, maximal, included_by, non_trivial. Supports are bitstrings
/// joined by `;`, witnesses space-separated `p/q` values.
pub fn records_to_csv(records: &[ClassificationRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record([
        "support",
        "feasible",
        "witness",
        "symmetric",
        "fewer_bits",
        "dj_computable",
        "maximal",
        "included_by",
        "non_trivial",
    ])
    .map_err(io)?;
    for r in records {
        let witness = r
            .witness
            .as_ref()
            .map(|w| w.z().iter().map(rational::format).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        let included = r
            .included_by
            .as_ref()
            .map(|s| s.iter().map(|&x| format_mask(x, r.arity)).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        w.write_record([
            r.support_strings().join(";"),
            r.feasible.to_string(),
            witness,
            r.flags.symmetric.to_string(),
            r.flags.fewer_bits.to_string(),
            r.flags.dj_computable.to_string(),
            r.maximal.to_string(),
            included,
            r.non_trivial().to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

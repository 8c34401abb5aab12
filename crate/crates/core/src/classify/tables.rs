//! Published 3- and 4-bit case tables, transcribed, and their re-derivation.
//!
//! Each row carries its support, the weights printed for it and the remark
//! it is tagged with. [`reproduce_tables`] checks the printed weights exactly,
//! recomputes every flag, and compares the non-trivial rows with exhaustive
//! enumeration.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{
    dj_computable, enumerate_reduced_with_workers, essential_bits, fewer_bits, group_by_orbit, orbit_key,
    ClassificationRecord,
};
use crate::feasibility::{decide_reduced, verify_result, FeasibilityResult, WeightVector};
use crate::pbf::{format_mask, parse_mask};
use crate::rational::{self, ratio};
use crate::reduce::ReducedFn;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weights {
    /// No weights printed.
    None,
    /// A single weight vector.
    Exact(&'static [(i64, i64)]),
    /// A family described by (in)equalities; `values` is the member we check.
    Representative {
        values: &'static [(i64, i64)],
        family: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Remark {
    /// Some witness depends on only this many bits.
    DependsOn(usize),
    Symmetric,
    /// Support is contained in the named row's support.
    IncludedBy(&'static str),
    NonTrivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub case: &'static str,
    pub support: &'static [&'static str],
    pub weights: Weights,
    pub remark: Remark,
}

use Remark::*;
use Weights::{Exact, Representative};

const Q: (i64, i64) = (1, 4);
const E: (i64, i64) = (1, 8);
const S: (i64, i64) = (1, 6);
const T: (i64, i64) = (1, 3);
const H: (i64, i64) = (1, 2);

pub const TABLE_3BIT: &[TableRow] = &[
    TableRow {
        case: "1",
        support: &["100", "011"],
        weights: Exact(&[H, Q, Q]),
        remark: DependsOn(2),
    },
    TableRow {
        case: "3",
        support: &["110", "101", "011"],
        weights: Exact(&[Q, Q, Q]),
        remark: Symmetric,
    },
    TableRow {
        case: "4",
        support: &["101", "011"],
        weights: Exact(&[S, S, T]),
        remark: DependsOn(1),
    },
    TableRow {
        case: "5",
        support: &["011"],
        weights: Weights::None,
        remark: IncludedBy("1"),
    },
    TableRow {
        case: "6",
        support: &["111"],
        weights: Weights::None,
        remark: DependsOn(1),
    },
];

pub const TABLE_4BIT: &[TableRow] = &[
    TableRow {
        case: "1",
        support: &["1000", "0111"],
        weights: Exact(&[H, S, S, S]),
        remark: DependsOn(2),
    },
    TableRow {
        case: "3:(1.1.1)",
        support: &["1100", "1010", "1001", "0110", "0101", "0011"],
        weights: Exact(&[Q, Q, Q, Q]),
        remark: Symmetric,
    },
    TableRow {
        case: "3:(1.1.2)",
        support: &["1100", "1010", "1001", "0111"],
        weights: Exact(&[T, S, S, S]),
        remark: NonTrivial,
    },
    TableRow {
        case: "3:(1.2)",
        support: &["1100", "1010", "0110"],
        weights: Representative {
            values: &[Q, Q, Q, E],
            family: "a1=a2=a3=1/4>a4",
        },
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "3:(1.3)",
        support: &["1100", "1010", "0101", "0011"],
        weights: Exact(&[T, S, S, T]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "3:(1.4)",
        support: &["1100", "1010", "0111"],
        weights: Exact(&[T, S, S, T]),
        remark: DependsOn(2),
    },
    TableRow {
        case: "3:(2.1)",
        support: &["1100", "1001", "0110", "0011"],
        weights: Exact(&[T, S, T, S]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "3:(2.2)",
        support: &["1100", "1001", "0101"],
        weights: Representative {
            values: &[Q, Q, E, Q],
            family: "a1=a2=a4=1/4>a3",
        },
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "3:(2.3)",
        support: &["1100", "1001", "0111"],
        weights: Exact(&[(3, 8), E, Q, E]),
        remark: IncludedBy("3:(1.1.2)"),
    },
    TableRow {
        case: "3:(3)",
        support: &["1100", "0110", "0101", "1011"],
        weights: Exact(&[S, T, S, S]),
        remark: NonTrivial,
    },
    TableRow {
        case: "3:(4)",
        support: &["1100", "0101", "1011"],
        weights: Exact(&[(7, 24), (5, 24), (1, 12), (7, 24)]),
        remark: IncludedBy("3:(3)"),
    },
    TableRow {
        case: "3:(5)",
        support: &["1100", "0011"],
        weights: Exact(&[S, T, E, (3, 8)]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "3:(6)",
        support: &["1100", "1011", "0111"],
        weights: Exact(&[Q, Q, E, E]),
        remark: NonTrivial,
    },
    TableRow {
        case: "4:(1.1)",
        support: &["1010", "1001", "0110", "0101"],
        weights: Exact(&[(3, 8), (3, 8), E, E]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "4:(1.2)",
        support: &["1010", "1001", "0011"],
        weights: Exact(&[Q, E, Q, Q]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "4:(1.3)",
        support: &["1010", "1001", "0111"],
        weights: Exact(&[(5, 12), T, (1, 12), (1, 12)]),
        remark: IncludedBy("3:(1.1.2)"),
    },
    TableRow {
        case: "4:(2)",
        support: &["1010", "0110", "0011", "1101"],
        weights: Exact(&[S, S, T, S]),
        remark: NonTrivial,
    },
    TableRow {
        case: "4:(3)",
        support: &["1010", "0101"],
        weights: Exact(&[E, S, (3, 8), T]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "4:(4)",
        support: &["1010", "0011", "1101"],
        weights: Exact(&[(1, 12), T, (5, 12), (1, 12)]),
        remark: IncludedBy("4:(2)"),
    },
    TableRow {
        case: "4:(5)",
        support: &["1010", "1101", "0111"],
        weights: Representative {
            values: &[Q, E, Q, E],
            family: "a1=a3=a2+a4=1/4",
        },
        remark: NonTrivial,
    },
    TableRow {
        case: "5:(1)",
        support: &["1001", "0110"],
        weights: Exact(&[E, S, T, (3, 8)]),
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "5:(2)",
        support: &["1001", "0101", "0011", "1110"],
        weights: Exact(&[S, S, S, T]),
        remark: NonTrivial,
    },
    TableRow {
        case: "5:(3)",
        support: &["1001", "0011", "1110"],
        weights: Exact(&[(1, 12), T, (1, 12), (5, 12)]),
        remark: IncludedBy("5:(2)"),
    },
    TableRow {
        case: "5:(4)",
        support: &["1001", "1110", "0111"],
        weights: Representative {
            values: &[Q, E, E, Q],
            family: "a1=a2+a3=a4=1/4",
        },
        remark: NonTrivial,
    },
    TableRow {
        case: "6:(1.1)",
        support: &["0110", "0101", "0011"],
        weights: Representative {
            values: &[E, Q, Q, Q],
            family: "a1<a2=a3=a4=1/4",
        },
        remark: IncludedBy("3:(1.1.1)"),
    },
    TableRow {
        case: "6:(1.2)",
        support: &["0110", "0101", "1011"],
        weights: Exact(&[(1, 12), (7, 24), (5, 24), (5, 24)]),
        remark: IncludedBy("3:(3)"),
    },
    TableRow {
        case: "6:(2)",
        support: &["0110", "0011", "1101"],
        weights: Exact(&[(1, 12), (5, 24), (7, 24), (5, 24)]),
        remark: IncludedBy("4:(2)"),
    },
    TableRow {
        case: "6:(3)",
        support: &["0110", "1101", "1011"],
        weights: Representative {
            values: &[E, Q, Q, E],
            family: "a2=a3=a1+a4=1/4",
        },
        remark: NonTrivial,
    },
    TableRow {
        case: "7:(1)",
        support: &["0101", "0011", "1110"],
        weights: Exact(&[(1, 12), (5, 24), (5, 24), (7, 24)]),
        remark: IncludedBy("5:(2)"),
    },
    TableRow {
        case: "7:(2)",
        support: &["0101", "1110", "1011"],
        weights: Representative {
            values: &[E, Q, E, Q],
            family: "a2=a1+a3=a4=1/4",
        },
        remark: NonTrivial,
    },
    TableRow {
        case: "8",
        support: &["0011", "1110", "1101"],
        weights: Representative {
            values: &[E, E, Q, Q],
            family: "a3=a4=a1+a2=1/4",
        },
        remark: NonTrivial,
    },
    TableRow {
        case: "9",
        support: &["1110", "1101", "1011", "0111"],
        weights: Exact(&[S, S, S, S]),
        remark: Symmetric,
    },
    TableRow {
        case: "10",
        support: &["1111"],
        weights: Exact(&[E, E, E, E]),
        remark: DependsOn(1),
    },
];

/// Rows tagged non-trivial.
pub fn bold_rows(table: &[TableRow]) -> impl Iterator<Item = &TableRow> {
    table.iter().filter(|r| r.remark == NonTrivial)
}

pub fn table_for(n: usize) -> Result<&'static [TableRow]> {
    match n {
        3 => Ok(TABLE_3BIT),
        4 => Ok(TABLE_4BIT),
        _ => Err(Error::ArityOutOfRange(n)),
    }
}

impl TableRow {
    pub fn reduced(&self) -> ReducedFn {
        ReducedFn::from_strs(self.support).expect("transcribed support is valid")
    }

    pub fn listed_weights(&self) -> Option<WeightVector> {
        let values = match self.weights {
            Weights::None => return None,
            Exact(v) | Representative { values: v, .. } => v,
        };
        Some(WeightVector::new(values.iter().map(|&(p, q)| ratio(p, q)).collect()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub case: String,
    pub support: Vec<String>,
    /// "exact", "representative" or "none".
    pub weights_kind: &'static str,
    pub family: Option<&'static str>,
    pub listed_weights: Option<Vec<String>>,
    /// Whether the listed weights solve the reduced system exactly.
    pub listed_weights_verify: Option<bool>,
    pub feasible: bool,
    pub engine_witness: Option<Vec<String>>,
    pub symmetric: bool,
    pub fewer_bits: bool,
    /// Fewest nonzero weights over all witnesses.
    pub essential_bits: Option<usize>,
    pub dj_computable: bool,
    pub maximal: bool,
    pub non_trivial: bool,
    pub remark: String,
    pub remark_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoldRowCheck {
    pub case: String,
    pub support: Vec<String>,
    pub confirmed: bool,
    /// Each failed condition, empty when confirmed.
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NontrivialSummary {
    /// Count stated alongside the table.
    pub published_count: usize,
    /// Maximal feasible supports that are non-trivial.
    pub raw_count: usize,
    /// The same, grouped by bit-permutation orbit.
    pub orbit_count: usize,
    pub orbit_representatives: Vec<Vec<String>>,
    pub orbit_sizes: Vec<usize>,
    pub bold_rows: Vec<BoldRowCheck>,
    pub bold_rows_confirmed: usize,
    /// Distinct orbits among the rows tagged non-trivial.
    pub bold_row_orbits: usize,
    pub matches_published_count_raw: bool,
    pub matches_published_count_orbits: bool,
    pub grouping: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub arity: usize,
    pub rows: Vec<RowReport>,
    pub rows_verified: usize,
    pub rows_with_weights: usize,
    pub remarks_holding: usize,
    /// Maximal feasible supports whose orbit contains no table row.
    pub unlisted_maximal: Vec<Vec<String>>,
    pub nontrivial: NontrivialSummary,
}

fn strings(v: &[crate::Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

fn remark_text(r: Remark) -> String {
    match r {
        DependsOn(k) => format!("depends on {k} bit{}", if k == 1 { "" } else { "s" }),
        Symmetric => "symmetric".into(),
        IncludedBy(c) => format!("included by case {c}"),
        NonTrivial => "non-trivial".into(),
    }
}

fn row_report(row: &TableRow, table: &[TableRow], by_key: &BTreeMap<u64, &ClassificationRecord>) -> RowReport {
    let g = row.reduced();
    let listed = row.listed_weights();
    let listed_verify = listed
        .as_ref()
        .map(|w| verify_result(&g, &FeasibilityResult::Feasible(w.clone())));
    let result = decide_reduced(&g);
    let feasible = result.is_feasible();
    let symmetric = g.to_partial().is_symmetric();
    let fb = feasible && fewer_bits(&g);
    let essential = essential_bits(&g);
    let dj = dj_computable(&g);
    let maximal = by_key
        .get(&super::support_key(g.support()))
        .map(|r| r.maximal)
        .unwrap_or(false);
    let non_trivial = feasible && !fb && !symmetric && !dj;
    let remark_holds = feasible
        && match row.remark {
            DependsOn(k) => fb && essential == Some(k),
            Symmetric => symmetric,
            IncludedBy(c) => table
                .iter()
                .find(|r| r.case == c)
                .map(|r| g.is_subset_of(&r.reduced()))
                .unwrap_or(false),
            NonTrivial => non_trivial,
        };
    let (kind, family) = match row.weights {
        Weights::None => ("none", None),
        Exact(_) => ("exact", None),
        Representative { family, .. } => ("representative", Some(family)),
    };
    RowReport {
        case: row.case.into(),
        support: row.support.iter().map(|s| s.to_string()).collect(),
        weights_kind: kind,
        family,
        listed_weights: listed.as_ref().map(|w| strings(w.z())),
        listed_weights_verify: listed_verify,
        feasible,
        engine_witness: result.witness().map(|w| strings(w.z())),
        symmetric,
        fewer_bits: fb,
        essential_bits: essential,
        dj_computable: dj,
        maximal,
        non_trivial,
        remark: remark_text(row.remark),
        remark_holds,
    }
}

fn bold_check(
    row: &TableRow,
    by_key: &BTreeMap<u64, &ClassificationRecord>,
    catalog_keys: &BTreeSet<u64>,
) -> BoldRowCheck {
    let g = row.reduced();
    let key = super::support_key(g.support());
    let mut reasons = Vec::new();
    let result = decide_reduced(&g);
    if !result.is_feasible() {
        reasons.push("infeasible".to_string());
    } else {
        for i in 1..=g.arity() {
            let probe = crate::decide_with_fixed_zeros(&g, &BTreeSet::from([i])).expect("index in range");
            if let Some(w) = probe.witness() {
                reasons.push(format!(
                    "feasible with z{i} = 0, witness ({})",
                    strings(w.z()).join(", ")
                ));
            }
        }
    }
    if g.to_partial().is_symmetric() {
        reasons.push("symmetric".into());
    }
    if dj_computable(&g) {
        reasons.push("inside one Hamming level".into());
    }
    match by_key.get(&key) {
        Some(r) if !r.maximal && r.feasible => {
            let sup = r
                .included_by
                .as_ref()
                .map(|s| {
                    s.iter()
                        .map(|&x| format_mask(x, g.arity()))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default();
            reasons.push(format!("not maximal, contained in feasible {{{sup}}}"));
        }
        _ => {}
    }
    if reasons.is_empty() && !catalog_keys.contains(&key) {
        reasons.push("missing from the non-trivial catalog".into());
    }
    BoldRowCheck {
        case: row.case.into(),
        support: row.support.iter().map(|s| s.to_string()).collect(),
        confirmed: reasons.is_empty(),
        reasons,
    }
}

/// Re-derives every row of the `n`-bit table (n = 3 or 4).
pub fn reproduce_tables_with_workers(n: usize, workers: usize) -> Result<TableReport> {
    let table = table_for(n)?;
    let records = enumerate_reduced_with_workers(n, workers)?;
    let by_key: BTreeMap<u64, &ClassificationRecord> = records.iter().map(|r| (r.key(), r)).collect();

    let rows: Vec<RowReport> = table.iter().map(|r| row_report(r, table, &by_key)).collect();
    let rows_with_weights = rows.iter().filter(|r| r.listed_weights.is_some()).count();
    let rows_verified = rows.iter().filter(|r| r.listed_weights_verify == Some(true)).count();
    let remarks_holding = rows.iter().filter(|r| r.remark_holds).count();

    let maximal: Vec<ClassificationRecord> = records.iter().filter(|r| r.maximal).cloned().collect();
    let table_orbits: BTreeSet<u64> = table.iter().map(|r| orbit_key(r.reduced().support(), n)).collect();
    let unlisted_maximal = maximal
        .iter()
        .filter(|r| !table_orbits.contains(&orbit_key(&r.support, n)))
        .map(|r| r.support_strings())
        .collect();

    let catalog: Vec<ClassificationRecord> = maximal.iter().filter(|r| r.non_trivial()).cloned().collect();
    let catalog_keys: BTreeSet<u64> = catalog.iter().map(|r| r.key()).collect();
    let orbits = group_by_orbit(&catalog);
    let bold: Vec<BoldRowCheck> = bold_rows(table)
        .map(|r| bold_check(r, &by_key, &catalog_keys))
        .collect();
    let bold_row_orbits = bold_rows(table)
        .map(|r| orbit_key(r.reduced().support(), n))
        .collect::<BTreeSet<_>>()
        .len();
    let published_count = bold.len();
    let nontrivial = NontrivialSummary {
        published_count,
        raw_count: catalog.len(),
        orbit_count: orbits.len(),
        orbit_representatives: orbits.iter().map(|o| o[0].support_strings()).collect(),
        orbit_sizes: orbits.iter().map(|o| o.len()).collect(),
        bold_rows_confirmed: bold.iter().filter(|b| b.confirmed).count(),
        bold_rows: bold,
        bold_row_orbits,
        matches_published_count_raw: catalog.len() == published_count,
        matches_published_count_orbits: orbits.len() == published_count,
        grouping: "orbits under bit permutations; non-trivial means maximal feasible, not fewer_bits, \
                   not symmetric, not inside one Hamming level",
    };

    Ok(TableReport {
        arity: n,
        rows,
        rows_verified,
        rows_with_weights,
        remarks_holding,
        unlisted_maximal,
        nontrivial,
    })
}

pub fn reproduce_tables(n: usize) -> Result<TableReport> {
    reproduce_tables_with_workers(n, 1)
}

/// Parses a table support into masks; used by callers that want the raw bits.
pub fn row_masks(row: &TableRow) -> Vec<crate::Mask> {
    let n = row.support[0].len();
    row.support
        .iter()
        .map(|s| parse_mask(s, n).expect("valid bitstring"))
        .collect()
}

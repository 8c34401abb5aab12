//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use exact1q::classify::tables::{bold_rows, TABLE_3BIT, TABLE_4BIT};
use exact1q::classify::{enumerate_reduced, group_by_orbit, nontrivial_catalog, ClassificationRecord};
use exact1q::construct::{construct, dj_family, level_solutions, GroupedWeightProfile, LevelSolution};
use exact1q::pbf::{all_permutations, hamming_weight};
use exact1q::poly::{unique_representation, Degree1Polynomial};
use exact1q::rational::{self, int, ratio};
use exact1q::simulate::{apply_oracle, prepare, success_probabilities, SUCCESS_TOLERANCE};
use exact1q::{
    decide, decide_reduced, decide_with_fixed_zeros, precheck_bound, reduce, verify_result, FeasibilityResult, Mask,
    PartialBooleanFn, ReducedFn,
};
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

fn outcome(pass: bool, summary: impl Into<String>, details: Vec<String>) -> Outcome {
    Outcome {
        pass,
        summary: summary.into(),
        details,
    }
}

fn strs(g: &ReducedFn) -> String {
    format!("{{{}}}", g.support_strings().join(","))
}

fn from_strs(v: &[&str]) -> ReducedFn {
    ReducedFn::from_strs(v).unwrap()
}

fn by_key(records: &[ClassificationRecord]) -> BTreeMap<u64, &ClassificationRecord> {
    records.iter().map(|r| (r.key(), r)).collect()
}

fn criterion_1() -> Outcome {
    let records = enumerate_reduced(3).unwrap();
    let index = by_key(&records);
    let feasible: Vec<_> = records.iter().filter(|r| r.feasible).collect();
    let nontrivial = feasible.iter().filter(|r| r.non_trivial()).count();
    let mut unexplained = Vec::new();
    for r in &feasible {
        let trivial = |r: &ClassificationRecord| r.flags.symmetric || r.flags.fewer_bits;
        let covered = trivial(r)
            || r.included_by
                .as_ref()
                .and_then(|s| index.get(&exact1q::classify::support_key(s)))
                .is_some_and(|m| m.maximal && trivial(m));
        if !covered {
            unexplained.push(format!("{:?}", r.support_strings()));
        }
    }
    outcome(
        records.len() == 127 && nontrivial == 0 && unexplained.is_empty(),
        format!(
            "3-bit completeness: {} records, {} feasible, {} non-trivial, {} unexplained",
            records.len(),
            feasible.len(),
            nontrivial,
            unexplained.len()
        ),
        unexplained,
    )
}

fn criterion_2() -> Outcome {
    let records = enumerate_reduced(4).unwrap();
    let index = by_key(&records);
    let catalog = nontrivial_catalog(4).unwrap();
    let catalog_keys: BTreeSet<u64> = catalog.iter().map(|r| r.key()).collect();
    let mut details = Vec::new();
    let mut confirmed = 0;
    for row in bold_rows(TABLE_4BIT) {
        let g = row.reduced();
        let key = exact1q::classify::support_key(g.support());
        let mut problems = Vec::new();
        if !decide_reduced(&g).is_feasible() {
            problems.push("infeasible".to_string());
        }
        for i in 1..=4 {
            if let Some(w) = decide_with_fixed_zeros(&g, &BTreeSet::from([i])).unwrap().witness() {
                let z: Vec<String> = w.z().iter().map(rational::format).collect();
                problems.push(format!("z{i}=0 probe feasible ({})", z.join(",")));
            }
        }
        if g.to_partial().is_symmetric() {
            problems.push("symmetric".into());
        }
        if index[&key].flags.dj_computable {
            problems.push("dj_computable".into());
        }
        if !catalog_keys.contains(&key) {
            let why = if index[&key].maximal {
                "maximal but trivial"
            } else {
                "not maximal"
            };
            problems.push(format!("not in the non-trivial maximal catalog ({why})"));
        }
        if problems.is_empty() {
            confirmed += 1;
        } else {
            details.push(format!("case {} {}: {}", row.case, strs(&g), problems.join("; ")));
        }
    }
    let orbits = group_by_orbit(&catalog);
    details.push(format!(
        "orbit-grouped non-trivial maximal count = {} (raw {}), compared to 10",
        orbits.len(),
        catalog.len()
    ));
    for o in &orbits {
        details.push(format!(
            "orbit of size {}: {}",
            o.len(),
            o.iter()
                .map(|r| format!("{{{}}}", r.support_strings().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    outcome(
        records.len() == 32767 && confirmed == 10,
        format!(
            "4-bit headline: {confirmed}/10 bold supports confirmed non-trivial and maximal; {} orbits vs 10",
            orbits.len()
        ),
        details,
    )
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut details = Vec::new();
    for (n, table) in [(3, TABLE_3BIT), (4, TABLE_4BIT)] {
        for row in table {
            let Some(w) = row.listed_weights() else { continue };
            checked += 1;
            let g = row.reduced();
            if !verify_result(&g, &FeasibilityResult::Feasible(w.clone())) {
                let bad: Vec<String> = g
                    .support()
                    .iter()
                    .filter(|&&x| !rational::is_half(&w.weight_of(x)))
                    .map(|&x| {
                        format!(
                            "{} -> {}",
                            exact1q::pbf::format_mask(x, n),
                            rational::format(&w.weight_of(x))
                        )
                    })
                    .collect();
                details.push(format!(
                    "{n}-bit case {}: listed weights give {}",
                    row.case,
                    bad.join(", ")
                ));
            }
        }
    }
    outcome(
        details.is_empty(),
        format!(
            "table rows: {}/{} listed weight vectors verify exactly",
            checked - details.len(),
            checked
        ),
        details,
    )
}

fn criterion_4() -> Outcome {
    let g = from_strs(&["001", "010", "111"]);
    let r = decide_reduced(&g);
    let cert_ok = !r.is_feasible() && verify_result(&g, &r);
    let p = Degree1Polynomial::new(vec![int(-1), int(1), int(1)]).unwrap();
    let message = p.function_of().err().map(|e| e.to_string()).unwrap_or_default();
    let cites = message.contains("x1") && message.contains("less than 0");
    let unique = unique_representation(&g).map(|q| q.coefficients().to_vec()) == Some(vec![int(-1), int(1), int(1)]);
    outcome(
        cert_ok && cites && unique,
        format!("negative-coefficient counterexample: certificate verifies={cert_ok}, rejection=\"{message}\""),
        vec![],
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut count = 0;
    let mut check = |g: ReducedFn| {
        count += 1;
        if decide_reduced(&g).is_feasible() != common::brute_force_feasible(&g).is_some() {
            mismatches.push(strs(&g));
        }
    };
    common::all_supports(3).for_each(&mut check);
    let mut rng = rand::rngs::StdRng::seed_from_u64(20240601);
    let mut seen = BTreeSet::new();
    while seen.len() < 2000 {
        let s = rng.gen_range(1..1u64 << 15);
        if seen.insert(s) {
            check(common::support_from_index(4, s));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        mismatches.is_empty() && secs < 60.0,
        format!(
            "oracle equivalence: {count} supports, {} mismatches, {secs:.1}s",
            mismatches.len()
        ),
        mismatches,
    )
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for k in 1..=3usize {
        let n = 3 * k;
        let profile =
            GroupedWeightProfile::new(vec![0, k, n], vec![ratio(1, n as i64), ratio(1, 2 * n as i64)]).unwrap();
        let sols = level_solutions(&profile);
        let f = construct(&profile).unwrap();
        let feasible = decide(&f).unwrap().is_feasible();
        pass &= feasible;
        let shown: Vec<String> = sols
            .iter()
            .map(|LevelSolution(m)| format!("({},{})", m[0], m[1]))
            .collect();
        let ok = match k {
            1 => exact1q::classify::fewer_bits(&reduce(&f).unwrap()),
            2 => sols == vec![LevelSolution(vec![1, 4]), LevelSolution(vec![2, 2])],
            _ => sols == vec![LevelSolution(vec![2, 2]), LevelSolution(vec![3, 3])],
        };
        let expected = match k {
            1 => "a fewer_bits function".to_string(),
            2 => "{(1,4),(2,2)}".to_string(),
            _ => "{(2,2),(3,3)}".to_string(),
        };
        details.push(format!(
            "k={k}: patterns {{{}}}, {} ones, decide feasible={feasible}, expected {expected}: {}",
            shown.join(","),
            f.ones().len(),
            if ok { "ok" } else { "MISMATCH" }
        ));
        pass &= ok;
    }
    outcome(pass, "construction examples k=1,2,3", details)
}

fn criterion_7() -> Outcome {
    let mut details = Vec::new();
    for n in 1..=10 {
        for f in dj_family(n).unwrap() {
            if !f.is_symmetric() || !decide(&f).unwrap().is_feasible() {
                details.push(format!("n={n}: level {} failed", hamming_weight(f.ones()[0])));
            }
        }
    }
    for n in 1..=4 {
        for r in enumerate_reduced(n)
            .unwrap()
            .into_iter()
            .filter(|r| r.flags.dj_computable)
        {
            let levels: BTreeSet<u32> = r.support.iter().map(|&x| hamming_weight(x)).collect();
            let c = *levels.iter().next().unwrap() as usize;
            if levels.len() != 1 || c < n.div_ceil(2) || c > n {
                details.push(format!(
                    "n={n}: {:?} flagged but spans levels {levels:?}",
                    r.support_strings()
                ));
            }
        }
    }
    for n in (2..=12).step_by(2) {
        let central = (1..=n / 2).fold(1u64, |acc, i| acc * (n / 2 + i) as u64 / i as u64);
        if central > 1 << (n - 1) {
            details.push(format!("C({n},{}) = {central} > 2^{}", n / 2, n - 1));
        }
    }
    outcome(
        details.is_empty(),
        "Deutsch-Jozsa family and level characterization",
        details,
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut simulated = 0;
    let mut worst = f64::INFINITY;
    let mut worst_gap: f64 = 0.0;
    for n in 1..=4 {
        for r in enumerate_reduced(n).unwrap().into_iter().filter(|r| r.feasible) {
            let f = r.reduced().to_partial();
            let w = r.witness.as_ref().unwrap();
            let rep = success_probabilities(&f, w).unwrap();
            simulated += 1;
            worst = worst.min(rep.min_success);
            if rep.min_success < 1.0 - SUCCESS_TOLERANCE {
                details.push(format!("{:?}: min_success {}", r.support_strings(), rep.min_success));
            }
            let s = prepare(w);
            for &a in f.zeros() {
                let sa = apply_oracle(&s, a).unwrap();
                for x in f.domain() {
                    let float = sa.inner(&apply_oracle(&s, x).unwrap());
                    let exact = rational::to_f64(&w.fourier_overlap(a ^ x));
                    worst_gap = worst_gap.max((float - exact).abs());
                }
            }
        }
    }
    if worst_gap > 1e-9 {
        details.push(format!("inner-product gap {worst_gap:e}"));
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        details.is_empty() && secs < 60.0,
        format!("simulator: {simulated} witnesses, min success {worst:.12}, max |float - exact| {worst_gap:.1e}, {secs:.1}s"),
        details,
    )
}

/// Every non-constant partial function on `n` bits (each input 0, 1 or undefined).
fn all_partial(n: usize) -> impl Iterator<Item = PartialBooleanFn> {
    let size = 1usize << n;
    (0..3u64.pow(size as u32)).filter_map(move |mut code| {
        let (mut ones, mut zeros) = (Vec::new(), Vec::new());
        for x in 0..size as Mask {
            match code % 3 {
                0 => zeros.push(x),
                1 => ones.push(x),
                _ => {}
            }
            code /= 3;
        }
        let f = PartialBooleanFn::new(n, ones, zeros).unwrap();
        (!f.is_constant()).then_some(f)
    })
}

fn criterion_9() -> Outcome {
    let mut details = Vec::new();
    // downward closure, n <= 4
    for n in 1..=4 {
        let records = enumerate_reduced(n).unwrap();
        for (idx, r) in records.iter().enumerate().filter(|(_, r)| r.feasible) {
            let s = idx as u64 + 1;
            for j in 0..(1u64 << n) - 1 {
                let t = s & !(1 << j);
                if t != s && t != 0 && !records[(t - 1) as usize].feasible {
                    details.push(format!(
                        "closure: {:?} minus one element infeasible",
                        r.support_strings()
                    ));
                }
            }
        }
    }
    // permutation equivariance, n <= 3
    for n in 1..=3 {
        for g in common::all_supports(n) {
            let r = decide_reduced(&g);
            for p in all_permutations(n) {
                let h = g.permute_bits(&p).unwrap();
                let rh = decide_reduced(&h);
                let moved_witness_ok = match r.witness() {
                    Some(w) => {
                        let mut z = vec![int(0); n];
                        for i in 0..n {
                            z[p[i] - 1] = w.z()[i].clone();
                        }
                        verify_result(&h, &FeasibilityResult::Feasible(exact1q::WeightVector::new(z)))
                    }
                    None => true,
                };
                if rh.is_feasible() != r.is_feasible() || !moved_witness_ok {
                    details.push(format!("equivariance: {} under {p:?}", strs(&g)));
                }
            }
        }
    }
    // bound necessity and reduction law, n <= 3 exhaustive
    let mut partials = 0;
    for n in 1..=3 {
        for f in all_partial(n) {
            partials += 1;
            let direct = decide(&f).unwrap().is_feasible();
            if direct && !precheck_bound(&f).unwrap() {
                details.push(format!("bound: feasible function over the bound {:?}", f));
            }
            if direct != decide_reduced(&reduce(&f).unwrap()).is_feasible() {
                details.push(format!("reduction law: ones {:?} zeros {:?}", f.ones(), f.zeros()));
            }
        }
    }
    outcome(
        details.is_empty(),
        format!("property suite: closure n<=4, equivariance n<=3, bound and reduction law over {partials} partial functions"),
        details,
    )
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let o = run();
        println!(
            "[{}] criterion {id}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary,
            start.elapsed().as_secs_f64()
        );
        for d in &o.details {
            println!("       {d}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

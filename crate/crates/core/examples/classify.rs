//! Exhaustive classification on 3 and 4 bits, and the vertex route on 5.

use exact1q::classify::{enumerate_reduced, group_by_orbit, maximal_feasible_with_workers};

fn main() -> exact1q::Result<()> {
    for n in 3..=4 {
        let records = enumerate_reduced(n)?;
        let feasible = records.iter().filter(|r| r.feasible).count();
        let maximal: Vec<_> = records.iter().filter(|r| r.maximal).cloned().collect();
        let nontrivial: Vec<_> = maximal.iter().filter(|r| r.non_trivial()).cloned().collect();
        println!(
            "n={n}: {} supports, {feasible} feasible, {} maximal, {} non-trivial maximal in {} orbit(s)",
            records.len(),
            maximal.len(),
            nontrivial.len(),
            group_by_orbit(&nontrivial).len()
        );
        for r in &nontrivial {
            println!("  {:?}", r.support_strings());
        }
    }
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
    let five = maximal_feasible_with_workers(5, workers)?;
    let nontrivial: Vec<_> = five.into_iter().filter(|r| r.non_trivial()).collect();
    println!(
        "n=5: {} non-trivial maximal supports in {} orbit(s)",
        nontrivial.len(),
        group_by_orbit(&nontrivial).len()
    );
    Ok(())
}

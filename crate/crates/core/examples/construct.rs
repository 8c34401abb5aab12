//! Every function computed by a grouped-weight algorithm.

use exact1q::construct::{construct, level_solutions, GroupedWeightProfile};
use exact1q::rational::ratio;
use exact1q::{decide, pbf::format_mask};

fn main() -> exact1q::Result<()> {
    for k in 1..=3usize {
        let n = 3 * k;
        let profile = GroupedWeightProfile::new(vec![0, k, n], vec![ratio(1, n as i64), ratio(1, 2 * n as i64)])?;
        let f = construct(&profile)?;
        let sols: Vec<_> = level_solutions(&profile).into_iter().map(|s| s.0).collect();
        println!(
            "k={k}: group weights {sols:?}, {} ones, computable: {}",
            f.ones().len(),
            decide(&f)?.is_feasible()
        );
        if k == 1 {
            let ones: Vec<String> = f.ones().iter().map(|&x| format_mask(x, n)).collect();
            println!("  ones {ones:?}");
        }
    }
    Ok(())
}

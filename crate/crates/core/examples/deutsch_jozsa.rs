//! The Deutsch-Jozsa family: one Hamming level against the all-zeros input.

use exact1q::construct::dj_family;
use exact1q::{decide, hamming_weight};

fn main() -> exact1q::Result<()> {
    for n in [2, 5, 8] {
        for f in dj_family(n)? {
            println!(
                "n={n} level {}: {} ones, symmetric {}, computable {}",
                hamming_weight(f.ones()[0]),
                f.ones().len(),
                f.is_symmetric(),
                decide(&f)?.is_feasible()
            );
        }
    }
    Ok(())
}

//! Check a Farkas certificate by hand: y^T A >= 0 and y^T b < 0.

use exact1q::feasibility::reduced_system;
use exact1q::rational::{self, Rational};
use exact1q::{decide_reduced, ReducedFn};
use num_traits::Zero;

fn main() -> exact1q::Result<()> {
    let g = ReducedFn::from_strs(&["001", "010", "111"])?;
    let r = decide_reduced(&g);
    let y = &r.certificate().expect("infeasible").multipliers;
    let system = reduced_system(&g, &Default::default());
    for (row, b) in system.rows().iter().zip(system.rhs()) {
        let cells: Vec<String> = row.iter().map(rational::format).collect();
        println!("[{}] = {}", cells.join(" "), rational::format(b));
    }
    println!(
        "y = ({})",
        y.iter().map(rational::format).collect::<Vec<_>>().join(", ")
    );
    let combo: Vec<Rational> = (0..system.cols())
        .map(|j| {
            y.iter()
                .zip(system.rows())
                .fold(Rational::zero(), |acc, (yi, row)| acc + yi * &row[j])
        })
        .collect();
    let rhs = y
        .iter()
        .zip(system.rhs())
        .fold(Rational::zero(), |acc, (yi, b)| acc + yi * b);
    println!(
        "y^T A = ({}), y^T b = {}",
        combo.iter().map(rational::format).collect::<Vec<_>>().join(", "),
        rational::format(&rhs)
    );
    println!("certificate valid: {}", system.certifies_infeasibility(y));
    Ok(())
}

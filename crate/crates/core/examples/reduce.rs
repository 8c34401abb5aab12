//! Reduce a function to the form that is 0 only on the all-zeros input.

use exact1q::{decide, decide_reduced, reduce, PartialBooleanFn};

fn main() -> exact1q::Result<()> {
    // balanced vs constant on two bits, plus one undefined input
    let f = PartialBooleanFn::from_strs(&["01", "10"], &["00"])?;
    let g = reduce(&f)?;
    println!("f ones {:?} zeros {:?}", f.ones(), f.zeros());
    println!("reduced support {:?}", g.support_strings());
    println!(
        "same answer: {} / {}",
        decide(&f)?.is_feasible(),
        decide_reduced(&g).is_feasible()
    );

    let h = PartialBooleanFn::from_strs(&["111", "100"], &["000", "011"])?;
    println!("diff set of h: {:?}", reduce(&h)?.support_strings());
    Ok(())
}

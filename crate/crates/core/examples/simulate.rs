//! Run the 1-query algorithm for a witness and for a wrong guess.

use exact1q::rational::ratio;
use exact1q::simulate::success_probabilities;
use exact1q::{decide, pbf::format_mask, PartialBooleanFn, WeightVector};

fn main() -> exact1q::Result<()> {
    let f = PartialBooleanFn::from_strs(&["1100", "1010", "1001", "0111"], &["0000"])?;
    let w = decide(&f)?.witness().cloned().expect("computable");
    let report = success_probabilities(&f, &w)?;
    for (x, (p0, p1)) in &report.per_input {
        println!("{}: P(0) = {p0:.12}, P(1) = {p1:.12}", format_mask(*x, 4));
    }
    println!("min success {:.12}", report.min_success);

    let guess = WeightVector::new(vec![ratio(1, 4); 4]);
    let wrong = success_probabilities(&f, &guess)?;
    println!("equal weights instead: min success {:.12}", wrong.min_success);
    Ok(())
}

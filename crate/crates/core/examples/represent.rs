//! Degree-1 polynomial representations and the functions they define.

use exact1q::poly::{represent, unique_representation, Degree1Polynomial, FunctionClasses};
use exact1q::rational::{self, ratio};
use exact1q::ReducedFn;

fn show(p: &Degree1Polynomial) -> String {
    p.coefficients()
        .iter()
        .map(rational::format)
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> exact1q::Result<()> {
    let g = ReducedFn::from_strs(&["1100", "1010", "1001", "0111"])?;
    let p = represent(&g)?;
    println!("p = ({})", show(&p));

    let q = Degree1Polynomial::new(vec![ratio(1, 2); 4])?;
    let classes = q.function_of()?;
    println!("one-class of |x|/2: {:?}", FunctionClasses::strings(&classes.one, 4));

    let bad = ReducedFn::from_strs(&["001", "010", "111"])?;
    let r = unique_representation(&bad).expect("full-rank support");
    println!("unique fit for {:?}: ({})", bad.support_strings(), show(&r));
    println!("rejected: {}", r.function_of().unwrap_err());
    Ok(())
}

//! Decide a few functions and print the witness or the certificate.

use exact1q::{decide, rational, verify_decision, PartialBooleanFn};

fn main() -> exact1q::Result<()> {
    let cases = [
        ("Deutsch", PartialBooleanFn::from_strs(&["01", "10"], &["00", "11"])?),
        (
            "weight-2 level",
            PartialBooleanFn::from_strs(&["110", "101", "011"], &["000"])?,
        ),
        (
            "mixed levels",
            PartialBooleanFn::from_strs(&["1100", "1010", "1001", "0111"], &["0000"])?,
        ),
        (
            "needs two queries",
            PartialBooleanFn::from_strs(&["001", "010", "111"], &["000"])?,
        ),
    ];
    for (name, f) in &cases {
        let r = decide(f)?;
        assert!(verify_decision(f, &r));
        match r.witness() {
            Some(w) => {
                let z: Vec<String> = w.z().iter().map(rational::format).collect();
                println!(
                    "{name}: computable, z0 = {}, z = ({})",
                    rational::format(w.z0()),
                    z.join(", ")
                );
            }
            None => {
                let y: Vec<String> = r
                    .certificate()
                    .unwrap()
                    .multipliers
                    .iter()
                    .map(rational::format)
                    .collect();
                println!("{name}: not computable, Farkas multipliers ({})", y.join(", "));
            }
        }
    }
    Ok(())
}

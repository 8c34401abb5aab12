//! Re-derive the published 4-bit table and print the disagreements.

use exact1q::classify::tables::reproduce_tables;

fn main() -> exact1q::Result<()> {
    let report = reproduce_tables(4)?;
    println!(
        "{}/{} listed weight vectors verify, {}/{} remarks hold",
        report.rows_verified,
        report.rows_with_weights,
        report.remarks_holding,
        report.rows.len()
    );
    for row in report
        .rows
        .iter()
        .filter(|r| !r.remark_holds || r.listed_weights_verify == Some(false))
    {
        println!(
            "  case {}: weights verify {:?}, remark \"{}\" holds {}",
            row.case, row.listed_weights_verify, row.remark, row.remark_holds
        );
    }
    let nt = &report.nontrivial;
    println!(
        "non-trivial maximal: {} raw, {} orbit(s); table marks {} rows in {} orbit(s)",
        nt.raw_count, nt.orbit_count, nt.published_count, nt.bold_row_orbits
    );
    for b in nt.bold_rows.iter().filter(|b| !b.confirmed) {
        println!("  case {}: {}", b.case, b.reasons.join("; "));
    }
    Ok(())
}

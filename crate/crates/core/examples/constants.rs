//! Recompute the published constants and compare.

use systolic::constants::verify_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in verify_all()? {
        println!(
            "{:<24} {:>14.10} vs {:<8} {:<26} {}",
            r.name,
            r.computed,
            r.paper_value,
            format!("{:?}", r.relation),
            if r.holds() { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}

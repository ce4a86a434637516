//! Truncated Poincare series against the analytic majorants.

use std::f64::consts::LN_2;

use systolic::poincare::truncated_series;
use systolic::surfaces::{build_pants, build_torus, systole_estimate, PantsParams, TorusParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = 4.0 * LN_2;
    let pants = build_pants(PantsParams::symmetric(l))?;
    for depth in [4, 8, 12] {
        let r = truncated_series(&pants, 0.6, depth, false)?;
        println!(
            "pants depth {depth:>2}: sum {:.6}, bound {:?}, within {:?}",
            r.nontrivial_sum, r.analytic_bound, r.within_bound
        );
    }

    let torus = build_torus(TorusParams::new(4.0, 0.0))?;
    let s = systole_estimate(&torus, 12)?.length;
    let sigma = 1.9 / s;
    for include_identity in [false, true] {
        let r = truncated_series(&torus, sigma, 10, include_identity)?;
        println!(
            "torus identity={include_identity}: sum {:.6}, bound {:?}",
            r.partial_sum, r.analytic_bound
        );
    }

    // below the threshold the pants majorant is divergent
    let r = truncated_series(&pants, 0.45, 8, false)?;
    println!(
        "pants sigma 0.45: sum {:.6}, bound {:?}",
        r.nontrivial_sum, r.analytic_bound
    );
    Ok(())
}

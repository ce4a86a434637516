//! Orbit growth ln N(R) / R against the critical exponent bounds.

use systolic::poincare::{delta_bound, empirical_delta, max_safe_radius, systole_floor};
use systolic::surfaces::{build_pants, build_torus, PantsParams, SurfaceGroup, TorusParams};

fn report(name: &str, g: &SurfaceGroup) -> Result<(), Box<dyn std::error::Error>> {
    let depth = 12;
    let r = max_safe_radius(g, depth)?;
    let radii: Vec<f64> = (1..=4).map(|k| r * k as f64 / 4.0).collect();
    let bound = delta_bound(g.kind, systole_floor(g)?)?;
    println!(
        "{name}: delta <= {:.4} (published constant {:.4})",
        bound.value, bound.published
    );
    for c in empirical_delta(g, &radii, depth)? {
        println!(
            "  R {:>6.2}  N {:>8}  ln N / R {:.4}",
            c.radius, c.count, c.ratio
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report("pants l = 4", &build_pants(PantsParams::symmetric(4.0))?)?;
    report("pants l = 6", &build_pants(PantsParams::symmetric(6.0))?)?;
    report("torus l = 4", &build_torus(TorusParams::new(4.0, 0.0))?)?;
    Ok(())
}

//! One-holed tori: boundary length against twice the systole.

use systolic::surfaces::{
    boundary_length_torus, build_torus, lemma3_check, torus_threshold, TorusParams,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let threshold = torus_threshold();
    println!("systole threshold {threshold:.6}");
    println!(
        "{:>5} {:>6} {:>9} {:>9} {:>6}",
        "l", "tau", "systole", "boundary", "holds"
    );
    for l in [1.0, 2.0, 2.6, 3.0, 4.0, 6.0] {
        for tau in [0.0, l / 4.0] {
            let p = TorusParams::new(l, tau);
            let c = lemma3_check(p, 10)?;
            println!(
                "{l:>5.2} {tau:>6.3} {:>9.5} {:>9.5} {:>6}",
                c.systole,
                c.boundary,
                if c.threshold_ok {
                    c.conclusion_ok.to_string()
                } else {
                    "-".into()
                },
            );
        }
    }

    let p = TorusParams::new(3.0, 0.5);
    let g = build_torus(p)?;
    println!(
        "basepoint {:?}, seam {:.6}, closed-form boundary {:.6}",
        g.basepoint,
        p.seam(),
        boundary_length_torus(p)?
    );
    Ok(())
}

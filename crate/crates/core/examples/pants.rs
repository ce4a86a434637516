//! A pair of pants from its three boundary lengths.
//!
//! cargo run --example pants -- 2 3 4

use systolic::surfaces::{build_pants, systole_estimate, PantsParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let p = match args[..] {
        [l1, l2, l3] => PantsParams::new(l1, l2, l3),
        _ => PantsParams::new(2.0, 3.0, 4.0),
    };
    let g = build_pants(p)?;
    println!("A = {:?}\nB = {:?}", g.gen_a, g.gen_b);
    for (w, l) in g.boundary_words().iter().zip(g.boundary_lengths()?) {
        println!("boundary {w:>2}: {l:.12}");
    }
    let s = systole_estimate(&g, 10)?;
    println!(
        "systole <= {:.6} via {} ({} minimizers)",
        s.length,
        s.word,
        s.minimizers.len()
    );
    Ok(())
}

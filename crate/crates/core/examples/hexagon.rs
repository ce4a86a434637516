//! Right-angled hexagons from three alternating sides.
//!
//! cargo run --example hexagon -- 2.0 1.5 1.0

use systolic::hyptrig::{self, solve_hexagon};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (a, b, c) = match args[..] {
        [a, b, c] => (a, b, c),
        _ => (2.0, 1.5, 1.0),
    };
    let hex = solve_hexagon(a, b, c)?;
    println!("sides a, gamma, b, alpha, c, beta = {:.6?}", hex.sides());
    println!("cosine-rule residual {:.2e}", hex.residual());

    if a >= b && a >= c {
        // 1/2 - sinh(gamma/2) sinh(b/2), zero only for a = b = c
        println!("longest-side margin {:.6}", hyptrig::lemma1_margin(&hex)?);
    }

    // the sign of the indicator tells whether a exceeds b + c
    let ind = hyptrig::lemma2_indicator(b, c, hex.alpha)?;
    println!(
        "indicator {ind:+.6}, a - b - c = {:+.6}",
        hex.a - hex.b - hex.c
    );
    Ok(())
}

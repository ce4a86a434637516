//! Seeded sweeps over random hexagons, the same ones the CLI runs.
//!
//! cargo run --release --example lemma_sweeps -- 100000 7

use systolic::cli::{lemma1_sweep, lemma2_grid, lemma2_sweep};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let samples: u64 = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(10_000);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);

    let rows = lemma1_sweep(samples, seed)?;
    let tight = rows
        .iter()
        .min_by(|x, y| x.margin.total_cmp(&y.margin))
        .unwrap();
    println!("lemma 1: {} hexagons, tightest {:?}", rows.len(), tight);

    let rows = lemma2_sweep(samples, seed)?;
    let open = rows.iter().filter(|r| r.a.is_none()).count();
    let bad = rows.iter().filter(|r| !r.agree).count();
    println!(
        "lemma 2: {} samples ({open} do not close up), {bad} disagreements",
        rows.len()
    );

    let grid = lemma2_grid(20)?;
    println!(
        "lemma 2 grid: {} points, {} disagreements",
        grid.len(),
        grid.iter().filter(|r| !r.agree).count()
    );
    Ok(())
}

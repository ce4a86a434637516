//! Freely reduced words in two generators and their matrices.

use systolic::surfaces::{build_pants, PantsParams};
use systolic::words::{reduced_word_count, Word, WordStream};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = build_pants(PantsParams::symmetric(3.0))?;
    for d in 1..=6 {
        println!("depth {d}: {} reduced words", reduced_word_count(d));
    }

    // depth-first order, lowercase letters are inverses
    for (w, m) in WordStream::new(g.generators(), 2)?.take(8) {
        println!("{w:>3}  trace {:+.6}", m.trace());
    }

    let w: Word = "ABab".parse()?;
    let m = w.evaluate(&g.generators());
    println!(
        "{w}: reduced {}, cyclically reduced {}, length {:.6}",
        w.is_freely_reduced(),
        w.is_cyclically_reduced(),
        m.translation_length()?
    );
    Ok(())
}

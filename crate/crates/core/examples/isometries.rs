//! Isometries of the upper half-plane as normalized SL(2, R) matrices.

use systolic::isometry::{distance, Isometry, PlanePoint};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Isometry::axial(2.0);
    let t = Isometry::transverse(1.0);
    let g = a.conjugate(&t);
    println!("g = {g:?}");
    println!(
        "kind {:?}, trace {:.6}, translation length {:.6}",
        g.classify(),
        g.trace(),
        g.translation_length()?
    );

    let (rep, att) = g.fixed_points()?;
    println!("fixed points: repelling {rep:?}, attracting {att:?}");

    // points on the axis move by exactly the translation length
    let on_axis = t.apply(PlanePoint::I)?;
    println!(
        "d(p, g p) on the axis  {:.12}",
        distance(on_axis, g.apply(on_axis)?)
    );
    let off = PlanePoint::new(0.3, 2.0)?;
    println!(
        "d(p, g p) off the axis {:.12}",
        distance(off, g.apply(off)?)
    );

    let r = Isometry::rotation(0.7);
    println!("rotation: {:?}, trace {:.6}", r.classify(), r.trace());
    println!(
        "g^5 translation length {:.6}",
        g.pow(5).translation_length()?
    );
    Ok(())
}

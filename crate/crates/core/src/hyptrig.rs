//! Trigonometry of right-angled hyperbolic hexagons.
//!
//! A right-angled hexagon has six sides listed cyclically as
//! `a, gamma, b, alpha, c, beta`: the three alternating sides `a, b, c`
//! determine the hexagon, and each remaining side sits between two of them
//! (`gamma` between `a` and `b`, `alpha` between `b` and `c`, `beta` between
//! `c` and `a`). The sides are tied by the hexagon cosine rule
//!
//! ```text
//! cosh c = sinh a * sinh b * cosh gamma - cosh a * cosh b
//! ```
//!
//! and its two cyclic rotations.

use serde::Serialize;
use thiserror::Error;

/// Residual tolerance for the hexagon cosine rule.
pub const TOL_HEX: f64 = 1e-9;
/// Tolerance for pure algebraic identities.
pub const TOL_ALGEBRAIC: f64 = 1e-12;
/// Smallest accepted side length; below this `sinh` degenerates.
pub const MIN_LENGTH: f64 = 1e-8;
/// Largest accepted side length; `cosh` of products overflows beyond.
pub const MAX_LENGTH: f64 = 50.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TrigError {
    #[error("{name} = {value} is not a positive finite length")]
    NotPositive { name: &'static str, value: f64 },
    #[error("{name} = {value} is outside the supported range [{MIN_LENGTH:e}, {MAX_LENGTH}]")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("side a = {a} must be the largest of a, b = {b}, c = {c}")]
    Ordering { a: f64, b: f64, c: f64 },
    #[error("hexagon cosine rule residual {residual:e} exceeds {TOL_HEX:e}")]
    Residual { residual: f64 },
}

fn check_length(name: &'static str, value: f64) -> Result<f64, TrigError> {
    if !value.is_finite() || value <= 0.0 {
        return Err(TrigError::NotPositive { name, value });
    }
    if !(MIN_LENGTH..=MAX_LENGTH).contains(&value) {
        return Err(TrigError::OutOfRange { name, value });
    }
    Ok(value)
}

/// `arccosh(1 + u)` for `u >= 0`, accurate when `u` is tiny.
pub fn acosh1p(u: f64) -> f64 {
    let u = u.max(0.0);
    (u + (u * (u + 2.0)).sqrt()).ln_1p()
}

/// Side between two alternating sides `x` and `y`, opposite the third
/// alternating side `z`.
///
/// Uses `cosh s - 1 = (cosh z + cosh(x - y)) / (sinh x sinh y)`, which has
/// no cancellation.
fn seam(x: f64, y: f64, z: f64) -> f64 {
    acosh1p((z.cosh() + (x - y).cosh()) / (x.sinh() * y.sinh()))
}

/// A right-angled hexagon, sides in cyclic order `a, gamma, b, alpha, c, beta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RightHexagon {
    pub a: f64,
    pub gamma: f64,
    pub b: f64,
    pub alpha: f64,
    pub c: f64,
    pub beta: f64,
}

impl RightHexagon {
    /// Sides in cyclic order.
    pub fn sides(&self) -> [f64; 6] {
        [self.a, self.gamma, self.b, self.alpha, self.c, self.beta]
    }

    /// Largest relative residual of the three rotated cosine rules.
    ///
    /// Each residual is scaled by the largest term of its identity so the
    /// check stays meaningful when `cosh` is large.
    pub fn residual(&self) -> f64 {
        fn rule(x: f64, y: f64, between: f64, opposite: f64) -> f64 {
            let lhs = opposite.cosh();
            let product = x.sinh() * y.sinh() * between.cosh();
            let rhs = product - x.cosh() * y.cosh();
            (lhs - rhs).abs() / lhs.max(product).max(1.0)
        }
        rule(self.a, self.b, self.gamma, self.c)
            .max(rule(self.b, self.c, self.alpha, self.a))
            .max(rule(self.c, self.a, self.beta, self.b))
    }

    /// Rotate so the alternating sides read `(b, c, a)`.
    pub fn rotate(&self) -> RightHexagon {
        RightHexagon {
            a: self.b,
            gamma: self.alpha,
            b: self.c,
            alpha: self.beta,
            c: self.a,
            beta: self.gamma,
        }
    }
}

/// Solve the right-angled hexagon with alternating sides `a, b, c`.
pub fn solve_hexagon(a: f64, b: f64, c: f64) -> Result<RightHexagon, TrigError> {
    let a = check_length("a", a)?;
    let b = check_length("b", b)?;
    let c = check_length("c", c)?;
    let hex = RightHexagon {
        a,
        gamma: seam(a, b, c),
        b,
        alpha: seam(b, c, a),
        c,
        beta: seam(c, a, b),
    };
    let residual = hex.residual();
    if residual > TOL_HEX || !residual.is_finite() {
        return Err(TrigError::Residual { residual });
    }
    Ok(hex)
}

/// `1/2 - sinh(gamma/2) sinh(b/2)`, non-negative whenever `a` is the longest
/// alternating side, and zero exactly for the equilateral hexagon.
pub fn lemma1_margin(hex: &RightHexagon) -> Result<f64, TrigError> {
    if hex.a < hex.b || hex.a < hex.c {
        return Err(TrigError::Ordering {
            a: hex.a,
            b: hex.b,
            c: hex.c,
        });
    }
    Ok(0.5 - (hex.gamma / 2.0).sinh() * (hex.b / 2.0).sinh())
}

/// `sinh^2(alpha/2) tanh b tanh c - 1`.
///
/// Its sign is the sign of `a - (b + c)` where `a` is the alternating side
/// opposite `alpha` in the hexagon with consecutive sides `b, alpha, c`.
pub fn lemma2_indicator(b: f64, c: f64, alpha: f64) -> Result<f64, TrigError> {
    for (name, v) in [("b", b), ("c", c), ("alpha", alpha)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(TrigError::NotPositive { name, value: v });
        }
    }
    let s = (alpha / 2.0).sinh();
    Ok(s * s * b.tanh() * c.tanh() - 1.0)
}

/// `cosh` of the alternating side opposite `alpha` in the hexagon with
/// consecutive sides `b, alpha, c`. Values below 1 mean no such hexagon
/// closes up.
pub fn opposite_cosh(b: f64, c: f64, alpha: f64) -> f64 {
    b.sinh() * c.sinh() * alpha.cosh() - b.cosh() * c.cosh()
}

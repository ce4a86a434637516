//! Root finding and a consolidated check of every published constant.
//!
//! Each constant is recomputed from its defining equation: a coarse sign
//! scan locates the bracket, bisection refines it, and the result is
//! compared with the published figure under one of three relations.

use serde::Serialize;
use thiserror::Error;

use crate::surfaces;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstantsError {
    #[error("no sign change of f on [{lo}, {hi}] (f(lo) = {flo}, f(hi) = {fhi})")]
    Bracket {
        lo: f64,
        hi: f64,
        flo: f64,
        fhi: f64,
    },
    #[error("tolerance {0} must be positive")]
    Tolerance(f64),
    #[error("constant {name}: {source}")]
    Constant {
        name: &'static str,
        source: Box<ConstantsError>,
    },
}

/// A root located by bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    /// Final bracket, of width at most the requested tolerance.
    pub lo: f64,
    pub hi: f64,
    pub iterations: u32,
}

/// Bisection on `[lo, hi]` until the bracket is narrower than `tol`.
///
/// Requires `f(lo)` and `f(hi)` of opposite sign (or one of them zero).
/// Uses at most `ceil(log2((hi - lo) / tol))` halvings.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Root, ConstantsError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(ConstantsError::Tolerance(tol));
    }
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let (flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(Root {
            value: lo,
            lo,
            hi: lo,
            iterations: 0,
        });
    }
    if fhi == 0.0 {
        return Ok(Root {
            value: hi,
            lo: hi,
            hi,
            iterations: 0,
        });
    }
    // also rejects NaN endpoints
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(ConstantsError::Bracket { lo, hi, flo, fhi });
    }
    let lo_negative = flo < 0.0;
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(Root {
                value: mid,
                lo: mid,
                hi: mid,
                iterations,
            });
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Root {
        value: lo + (hi - lo) / 2.0,
        lo,
        hi,
        iterations,
    })
}

/// First sub-interval of `[lo, hi]` of width `step` on which `f` changes sign.
pub fn scan_bracket<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    step: f64,
) -> Result<(f64, f64), ConstantsError> {
    let n = ((hi - lo) / step).ceil() as usize;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for i in 1..=n {
        let x1 = (lo + i as f64 * step).min(hi);
        let f1 = f(x1);
        if f0 == 0.0 || f0.signum() * f1.signum() <= 0.0 {
            return Ok((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    Err(ConstantsError::Bracket {
        lo,
        hi,
        flo: f(lo),
        fhi: f(hi),
    })
}

/// Scan at step `1e-2`, then bisect the first bracket to `tol`.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Root, ConstantsError> {
    let (a, b) = scan_bracket(&f, lo, hi, SCAN_STEP)?;
    bisect(&f, a, b, tol)
}

pub const SCAN_STEP: f64 = 1e-2;
pub const ROOT_TOL: f64 = 1e-12;

/// Convergence polynomial of the one-holed torus estimate in `x = exp(-s l / 2)`.
pub fn torus_quartic(x: f64) -> f64 {
    (((4.0 * x - 2.0) * x + 1.0) * x + 2.0) * x - 1.0
}

/// Convergence polynomial of the pair-of-pants estimate in `x = exp(-s l / 2)`.
pub fn pants_quadratic(x: f64) -> f64 {
    (2.0 * x + 1.0) * x - 1.0
}

/// Positive root of [`torus_quartic`], about 0.4224.
pub fn quartic_root() -> Result<Root, ConstantsError> {
    find_root(torus_quartic, 0.0, 1.0, ROOT_TOL)
}

/// Positive root of [`pants_quadratic`], exactly 1/2.
pub fn quadratic_root() -> Result<Root, ConstantsError> {
    find_root(pants_quadratic, 0.0, 1.0, ROOT_TOL)
}

/// `-2 ln x*` for the quartic root `x*`: the torus exponent bound is this
/// constant divided by the systole.
pub fn torus_exponent_constant() -> Result<f64, ConstantsError> {
    Ok(-2.0 * quartic_root()?.value.ln())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// The published value is exact.
    Equals,
    /// The published value is a sufficient bound; the computed one may be smaller.
    PaperIsSufficientUpper,
    /// The published value is the computed one rounded to `decimals` places.
    PaperIsRounded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantReport {
    pub name: &'static str,
    pub computed: f64,
    pub paper_value: f64,
    pub bracket: (f64, f64),
    pub tolerance: f64,
    pub relation: Relation,
    /// Residual of the defining equation at `computed`.
    pub residual: f64,
}

impl ConstantReport {
    pub fn holds(&self) -> bool {
        let inside = self.bracket.0 <= self.computed && self.computed <= self.bracket.1;
        inside
            && match self.relation {
                Relation::Equals | Relation::PaperIsRounded => {
                    (self.computed - self.paper_value).abs() < self.tolerance
                }
                Relation::PaperIsSufficientUpper => {
                    self.computed <= self.paper_value + self.tolerance
                }
            }
    }
}

/// Accepted gap for a value published with `decimals` places: `5 * 10^-decimals`.
fn rounding_tol(decimals: i32) -> f64 {
    5.0 * 10f64.powi(-decimals)
}

fn named<T>(name: &'static str, r: Result<T, ConstantsError>) -> Result<T, ConstantsError> {
    r.map_err(|e| ConstantsError::Constant {
        name,
        source: Box::new(e),
    })
}

/// Recompute and compare every published constant, in a fixed order.
pub fn verify_all() -> Result<Vec<ConstantReport>, ConstantsError> {
    let mut out = Vec::with_capacity(7);

    let quartic = named("quartic_root", quartic_root())?;
    out.push(ConstantReport {
        name: "quartic_root",
        computed: quartic.value,
        paper_value: 0.4224,
        bracket: (quartic.lo, quartic.hi),
        tolerance: rounding_tol(4),
        relation: Relation::PaperIsRounded,
        residual: torus_quartic(quartic.value).abs(),
    });

    // -2 ln x is decreasing, so the bracket maps to a reversed bracket.
    let exponent = |x: f64| -2.0 * x.ln();
    let c_torus = exponent(quartic.value);
    out.push(ConstantReport {
        name: "torus_exponent_constant",
        computed: c_torus,
        paper_value: 1.73,
        bracket: (exponent(quartic.hi), exponent(quartic.lo)),
        tolerance: 1e-9,
        relation: Relation::PaperIsSufficientUpper,
        residual: torus_quartic((-c_torus / 2.0).exp()).abs(),
    });
    out.push(ConstantReport {
        name: "torus_half_threshold",
        computed: 2.0 * c_torus,
        paper_value: 3.46,
        bracket: (2.0 * exponent(quartic.hi), 2.0 * exponent(quartic.lo)),
        tolerance: 1e-9,
        relation: Relation::PaperIsSufficientUpper,
        residual: torus_quartic((-c_torus / 2.0).exp()).abs(),
    });

    let quadratic = named("pants_exponent_constant", quadratic_root())?;
    let c_pants = exponent(quadratic.value);
    out.push(ConstantReport {
        name: "pants_exponent_constant",
        computed: c_pants,
        paper_value: 2.0 * std::f64::consts::LN_2,
        bracket: (exponent(quadratic.hi), exponent(quadratic.lo)),
        tolerance: 1e-9,
        relation: Relation::Equals,
        residual: pants_quadratic(quadratic.value).abs(),
    });
    out.push(ConstantReport {
        name: "pants_half_threshold",
        computed: 2.0 * c_pants,
        paper_value: 4.0 * std::f64::consts::LN_2,
        bracket: (2.0 * exponent(quadratic.hi), 2.0 * exponent(quadratic.lo)),
        tolerance: 1e-9,
        relation: Relation::Equals,
        residual: pants_quadratic(quadratic.value).abs(),
    });

    let lemma3 = named("lemma3_threshold", surfaces::torus_threshold_root())?;
    out.push(ConstantReport {
        name: "lemma3_threshold",
        computed: lemma3.value,
        paper_value: 2.696,
        bracket: (lemma3.lo, lemma3.hi),
        tolerance: 1e-9,
        relation: Relation::PaperIsSufficientUpper,
        residual: surfaces::lemma3_gap(lemma3.value).abs(),
    });

    let bolza_eq = |s: f64| (s / 2.0).cosh() - (1.0 + std::f64::consts::SQRT_2);
    let bolza = named("bolza_systole", find_root(bolza_eq, 1.0, 5.0, ROOT_TOL))?;
    out.push(ConstantReport {
        name: "bolza_systole",
        computed: bolza.value,
        paper_value: 3.06,
        bracket: (bolza.lo, bolza.hi),
        tolerance: rounding_tol(2),
        relation: Relation::PaperIsRounded,
        residual: bolza_eq(bolza.value).abs(),
    });

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert!((r.value - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(r.iterations <= (1.0f64 / 1e-12).log2().ceil() as u32);
    }

    #[test]
    fn quadratic_root_is_one_half() {
        let r = bisect(pants_quadratic, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
        assert!((quadratic_root().unwrap().value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn quartic_root_value() {
        let r = bisect(torus_quartic, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.422_458).abs() < 1e-6);
        assert!(torus_quartic(r.value).abs() < 1e-9);
        let scanned = quartic_root().unwrap();
        assert!((scanned.value - r.value).abs() < 1e-12);
    }

    #[test]
    fn bracket_errors() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-9),
            Err(ConstantsError::Bracket { .. })
        ));
        assert!(matches!(
            bisect(|x| x, -1.0, 1.0, 0.0),
            Err(ConstantsError::Tolerance(_))
        ));
        assert!(scan_bracket(|x| x * x + 1.0, -1.0, 1.0, 0.1).is_err());
    }

    #[test]
    fn reversed_bracket_and_endpoint_roots() {
        let r = bisect(|x| x - 0.25, 1.0, 0.0, 1e-12).unwrap();
        assert!((r.value - 0.25).abs() < 1e-12);
        assert_eq!(bisect(|x| x, 0.0, 1.0, 1e-12).unwrap().value, 0.0);
    }

    #[test]
    fn reports_in_fixed_order() {
        let reports = verify_all().unwrap();
        let names: Vec<_> = reports.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            [
                "quartic_root",
                "torus_exponent_constant",
                "torus_half_threshold",
                "pants_exponent_constant",
                "pants_half_threshold",
                "lemma3_threshold",
                "bolza_systole"
            ]
        );
        for r in &reports {
            assert!(r.holds(), "{r:?}");
            assert!(r.residual < 1e-9, "{r:?}");
        }
    }

    #[test]
    fn report_relations() {
        let mut r = ConstantReport {
            name: "x",
            computed: 1.0,
            paper_value: 1.05,
            bracket: (0.9, 1.1),
            tolerance: 0.01,
            relation: Relation::PaperIsSufficientUpper,
            residual: 0.0,
        };
        assert!(r.holds());
        r.relation = Relation::PaperIsRounded;
        assert!(!r.holds());
        r.relation = Relation::PaperIsSufficientUpper;
        r.computed = 1.2;
        assert!(!r.holds());
    }
}

//! Marked two-generator Fuchsian groups for the pair of pants and the
//! one-holed torus, systole estimates, and the boundary-length check for
//! one-holed tori of large systole.
//!
//! Both constructions put the axis of the first generator on the imaginary
//! axis. The second generator translates along a geodesic that is carried
//! there by [`Isometry::transverse`], a translation along the unit
//! semicircle, which is the common perpendicular through `i`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants::{self, ConstantsError, Root};
use crate::hyptrig::{self, TrigError};
use crate::isometry::{Isometry, IsometryError, Kind, PlanePoint};
use crate::words::{self, Generators, Letter, Word, WordError};

/// Accepted range for boundary and cutting-curve lengths.
pub const LENGTH_RANGE: (f64, f64) = (0.1, 20.0);
/// Default word length for systole estimates.
pub const DEFAULT_SYSTOLE_DEPTH: usize = 12;
/// Translation lengths closer than this to the minimum count as ties.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SurfaceError {
    #[error("{name} = {value} outside [{}, {}]", LENGTH_RANGE.0, LENGTH_RANGE.1)]
    Range { name: &'static str, value: f64 },
    #[error("twist {tau} outside the canonical range (-{half}, {half}]")]
    Twist { tau: f64, half: f64 },
    #[error("hexagon: {0}")]
    Hexagon(#[from] TrigError),
    #[error("construction: {0}")]
    Construction(String),
    #[error(transparent)]
    Isometry(#[from] IsometryError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("word {word} is {kind:?}, expected hyperbolic")]
    NonHyperbolicWord { word: Word, kind: Kind },
    #[error(transparent)]
    Root(#[from] ConstantsError),
}

fn check_range(name: &'static str, value: f64) -> Result<f64, SurfaceError> {
    if value.is_finite() && (LENGTH_RANGE.0..=LENGTH_RANGE.1).contains(&value) {
        Ok(value)
    } else {
        Err(SurfaceError::Range { name, value })
    }
}

/// Boundary lengths of a pair of pants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PantsParams {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
}

impl PantsParams {
    pub fn new(l1: f64, l2: f64, l3: f64) -> Self {
        PantsParams { l1, l2, l3 }
    }

    pub fn symmetric(l: f64) -> Self {
        PantsParams::new(l, l, l)
    }

    pub fn min_length(&self) -> f64 {
        self.l1.min(self.l2).min(self.l3)
    }
}

/// Fenchel-Nielsen data of a one-holed torus cut along the curve `A`.
///
/// `l` is the length of `A` and `tau` the twist along it. The distance
/// `seam` between the two copies of `A` in the cut-open pants fixes the
/// boundary length; when absent it follows [`TorusParams::default_seam`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TorusParams {
    pub l: f64,
    pub tau: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seam: Option<f64>,
}

impl TorusParams {
    pub fn new(l: f64, tau: f64) -> Self {
        TorusParams { l, tau, seam: None }
    }

    pub fn with_seam(self, seam: f64) -> Self {
        TorusParams {
            seam: Some(seam),
            ..self
        }
    }

    /// Seam used when none is given: the crossing curve `B` has the same
    /// length as `A` at zero twist, unless that would not close up into a
    /// torus (short `A`), in which case `sinh(seam/2) sinh(l/2) = 2`.
    pub fn default_seam(l: f64) -> f64 {
        let s = (l / 2.0).sinh();
        2.0 * s.max(2.0 / s).asinh()
    }

    pub fn seam(&self) -> f64 {
        self.seam.unwrap_or_else(|| Self::default_seam(self.l))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Pants,
    Torus,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SurfaceParams {
    Pants(PantsParams),
    Torus(TorusParams),
}

/// A marked free group of rank two uniformizing a pair of pants or a
/// one-holed torus, with a basepoint in the lifted convex core.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceGroup {
    pub kind: SurfaceKind,
    pub gen_a: Isometry,
    pub gen_b: Isometry,
    pub basepoint: PlanePoint,
    pub params: SurfaceParams,
}

impl SurfaceGroup {
    pub fn generators(&self) -> Generators {
        Generators::new(self.gen_a, self.gen_b)
    }

    /// The same group with a different basepoint.
    pub fn with_basepoint(self, basepoint: PlanePoint) -> Self {
        SurfaceGroup { basepoint, ..self }
    }

    /// Conjugate generators and basepoint by `h`; the quotient surface is
    /// unchanged.
    pub fn conjugated(&self, h: &Isometry) -> Result<Self, SurfaceError> {
        Ok(SurfaceGroup {
            gen_a: self.gen_a.conjugate(h),
            gen_b: self.gen_b.conjugate(h),
            basepoint: h.apply(self.basepoint)?,
            ..*self
        })
    }

    /// Words whose translation lengths are the boundary lengths.
    pub fn boundary_words(&self) -> Vec<Word> {
        let parse = |s: &str| s.parse::<Word>().expect("static word");
        match self.kind {
            SurfaceKind::Pants => vec![parse("A"), parse("B"), parse("ba")],
            SurfaceKind::Torus => vec![parse("ABab")],
        }
    }

    pub fn boundary_lengths(&self) -> Result<Vec<f64>, SurfaceError> {
        let gens = self.generators();
        self.boundary_words()
            .iter()
            .map(|w| Ok(w.evaluate(&gens).translation_length()?))
            .collect()
    }
}

/// Pair of pants with boundary lengths `l1, l2, l3`.
///
/// The right-angled hexagon with alternating sides `l1/2, l2/2, l3/2` gives
/// the distance between the axes of the first two boundary curves. `A`
/// translates by `l1` along the imaginary axis, `B` by `l2` along the
/// geodesic at that distance, oriented so that `AB` has trace of modulus
/// `2 cosh(l3/2)`. The basepoint `i` is the foot of the common
/// perpendicular on the axis of `A`.
pub fn build_pants(p: PantsParams) -> Result<SurfaceGroup, SurfaceError> {
    let l1 = check_range("l1", p.l1)?;
    let l2 = check_range("l2", p.l2)?;
    let l3 = check_range("l3", p.l3)?;
    let hex = hyptrig::solve_hexagon(l1 / 2.0, l2 / 2.0, l3 / 2.0)?;
    let gen_a = Isometry::axial(l1);
    let gen_b = Isometry::axial(-l2).conjugate(&Isometry::transverse(hex.gamma));
    Ok(SurfaceGroup {
        kind: SurfaceKind::Pants,
        gen_a,
        gen_b,
        basepoint: PlanePoint::I,
        params: SurfaceParams::Pants(p),
    })
}

/// One-holed torus with cutting curve of length `l` and twist `tau`.
///
/// `A` translates by `l` along the imaginary axis. `B` is the translation
/// by the seam length along the unit semicircle followed by a twist: it
/// carries the axis of `A` to the other copy of the cutting curve.
/// The commutator `A B A^-1 B^-1` is the boundary curve. The basepoint is
/// the foot on the axis of `A` of the perpendicular to the boundary axis.
pub fn build_torus(p: TorusParams) -> Result<SurfaceGroup, SurfaceError> {
    let l = check_range("l", p.l)?;
    let half = l / 2.0;
    if !(p.tau.is_finite() && p.tau > -half && p.tau <= half) {
        return Err(SurfaceError::Twist { tau: p.tau, half });
    }
    let seam = p.seam();
    if !(hyptrig::MIN_LENGTH..=hyptrig::MAX_LENGTH).contains(&seam) {
        return Err(SurfaceError::Construction(format!(
            "seam {seam} outside the supported range"
        )));
    }
    let gen_a = Isometry::axial(l);
    let gen_b = Isometry::transverse(seam).compose(&Isometry::axial(p.tau));
    let boundary = gen_a.commutator(&gen_b);
    if boundary.classify() != Kind::Hyperbolic {
        return Err(SurfaceError::Construction(format!(
            "commutator with trace {} is not hyperbolic (l = {l}, seam = {seam})",
            boundary.trace()
        )));
    }
    let basepoint = match boundary.fixed_points()? {
        (Some(u), Some(v)) if u * v > 0.0 => PlanePoint::new(0.0, (u * v).sqrt())?,
        ends => {
            return Err(SurfaceError::Construction(format!(
                "boundary axis with ends {ends:?} meets the axis of A"
            )))
        }
    };
    Ok(SurfaceGroup {
        kind: SurfaceKind::Torus,
        gen_a,
        gen_b,
        basepoint,
        params: SurfaceParams::Torus(p),
    })
}

pub fn boundary_length_torus(p: TorusParams) -> Result<f64, SurfaceError> {
    let g = build_torus(p)?;
    Ok(g.gen_a.commutator(&g.gen_b).translation_length()?)
}

/// Shortest translation length among the cyclically reduced words of
/// length at most `depth`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystoleEstimate {
    pub length: f64,
    /// Lexicographically least word realizing `length` up to [`TIE_TOL`].
    pub word: Word,
    /// All words within [`TIE_TOL`] of `length`, in order.
    pub minimizers: Vec<Word>,
    pub depth: usize,
}

#[derive(Debug, Default)]
struct SystoleAcc {
    min: f64,
    words: Vec<(Word, f64)>,
    bad: Option<(Word, Kind)>,
}

impl SystoleAcc {
    fn new() -> Self {
        SystoleAcc {
            min: f64::INFINITY,
            ..Default::default()
        }
    }

    fn offer(&mut self, len: f64, word: &[Letter]) {
        if len < self.min {
            self.min = len;
            let cut = len + TIE_TOL;
            self.words.retain(|(_, l)| *l <= cut);
        }
        if len <= self.min + TIE_TOL {
            self.words.push((Word(word.to_vec()), len));
        }
    }

    fn merge(mut self, other: SystoleAcc) -> SystoleAcc {
        self.bad = self.bad.or(other.bad);
        self.min = self.min.min(other.min);
        let cut = self.min + TIE_TOL;
        self.words.extend(other.words);
        self.words.retain(|(_, l)| *l <= cut);
        self
    }
}

/// Enumeration estimate of the systole.
///
/// This is an upper bound for the true systole, exact as soon as a
/// shortest closed geodesic is represented by a word of length at most
/// `depth`.
pub fn systole_estimate(g: &SurfaceGroup, depth: usize) -> Result<SystoleEstimate, SurfaceError> {
    let gens = g.generators();
    let acc = words::fold_cyclic(
        &gens,
        depth,
        SystoleAcc::new,
        |acc, w, m| {
            if acc.bad.is_some() {
                return;
            }
            match m.translation_length() {
                Ok(len) => acc.offer(len, w),
                Err(_) => acc.bad = Some((Word(w.to_vec()), m.classify())),
            }
        },
        SystoleAcc::merge,
    )?;
    if let Some((word, kind)) = acc.bad {
        return Err(SurfaceError::NonHyperbolicWord { word, kind });
    }
    let mut minimizers: Vec<Word> = acc.words.into_iter().map(|(w, _)| w).collect();
    minimizers.sort();
    Ok(SystoleEstimate {
        length: acc.min,
        word: minimizers[0].clone(),
        minimizers,
        depth,
    })
}

/// `(cosh s / cosh(s/2) - 1) tanh(s/2) / 2 - 1`: lower bound, minus one, for
/// the quantity whose sign decides whether the boundary of a one-holed
/// torus of systole `s` exceeds `2s`.
pub fn lemma3_gap(s: f64) -> f64 {
    0.5 * (s.cosh() / (s / 2.0).cosh() - 1.0) * (s / 2.0).tanh() - 1.0
}

pub fn torus_threshold_root() -> Result<Root, ConstantsError> {
    constants::bisect(lemma3_gap, 1.0, 5.0, 1e-10)
}

/// Systole above which a one-holed torus has boundary longer than twice its
/// systole: the root of [`lemma3_gap`] on `[1, 5]`.
pub fn torus_threshold() -> f64 {
    torus_threshold_root()
        .expect("lemma3_gap changes sign on [1, 5]")
        .value
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma3Check {
    pub systole: f64,
    pub boundary: f64,
    pub threshold_ok: bool,
    pub conclusion_ok: bool,
}

impl Lemma3Check {
    /// A counterexample has the hypothesis without the conclusion.
    pub fn violated(&self) -> bool {
        self.threshold_ok && !self.conclusion_ok
    }
}

pub fn lemma3_check(p: TorusParams, depth: usize) -> Result<Lemma3Check, SurfaceError> {
    let g = build_torus(p)?;
    let systole = systole_estimate(&g, depth)?.length;
    let boundary = g.gen_a.commutator(&g.gen_b).translation_length()?;
    Ok(Lemma3Check {
        systole,
        boundary,
        threshold_ok: systole >= torus_threshold(),
        conclusion_ok: boundary >= 2.0 * systole - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_pants_traces() {
        let g = build_pants(PantsParams::symmetric(4.0)).unwrap();
        let expected = 2.0 * 2f64.cosh();
        let gens = g.generators();
        for w in ["A", "B", "AB"] {
            let m = w.parse::<Word>().unwrap().evaluate(&gens);
            assert!((m.trace().abs() - expected).abs() < 1e-9 * expected, "{w}");
        }
        for len in g.boundary_lengths().unwrap() {
            assert!((len - 4.0).abs() < 1e-9);
        }
    }

    #[test]
    fn pants_guard_and_permutation() {
        assert!(matches!(
            build_pants(PantsParams::new(0.05, 1.0, 1.0)),
            Err(SurfaceError::Range { .. })
        ));
        let lens = |p| {
            let mut v = build_pants(p).unwrap().boundary_lengths().unwrap();
            v.sort_by(f64::total_cmp);
            v
        };
        let a = lens(PantsParams::new(1.0, 2.5, 4.0));
        let b = lens(PantsParams::new(4.0, 1.0, 2.5));
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn torus_boundary_matches_trace_identity() {
        // tr[A,B] = tr^2 A + tr^2 B + tr^2 AB - trA trB trAB - 2, evaluated
        // on the raw generator traces (independent of the commutator product).
        let p = TorusParams::new(4.0, 0.0);
        let g = build_torus(p).unwrap();
        let x = g.gen_a.trace();
        let y = g.gen_b.trace();
        let z = g.gen_a.compose(&g.gen_b).trace();
        let tr = x * x + y * y + z * z - x * y * z - 2.0;
        assert!(tr < -2.0);
        let oracle = 2.0 * (-tr / 2.0).acosh();
        let l0 = boundary_length_torus(p).unwrap();
        assert!((l0 - oracle).abs() < 1e-9);
        // closed form for zero twist: cosh(L/2) = sinh^2(l/2) cosh d - cosh^2(l/2)
        let d = p.seam();
        let closed = 2.0 * ((2f64.sinh().powi(2)) * d.cosh() - 2f64.cosh().powi(2)).acosh();
        assert!((l0 - closed).abs() < 1e-9);
        assert!(l0 >= 8.0);
    }

    #[test]
    fn torus_twist_symmetry_and_continuity() {
        for tau in [0.3, 1.0, 1.9] {
            let plus = boundary_length_torus(TorusParams::new(4.0, tau)).unwrap();
            let minus = boundary_length_torus(TorusParams::new(4.0, -tau)).unwrap();
            assert!((plus - minus).abs() < 1e-9);
            let nudged = boundary_length_torus(TorusParams::new(4.0, tau + 1e-6)).unwrap();
            assert!((plus - nudged).abs() < 1e-3);
        }
        let g = build_torus(TorusParams::new(3.5, 0.0)).unwrap();
        let c = g.gen_a.commutator(&g.gen_b);
        assert!(c.trace().abs() > 2.0);
        assert!(boundary_length_torus(TorusParams::new(3.5, 0.0)).unwrap() > 0.0);
    }

    #[test]
    fn torus_guards() {
        assert!(matches!(
            build_torus(TorusParams::new(0.05, 0.0)),
            Err(SurfaceError::Range { .. })
        ));
        assert!(matches!(
            build_torus(TorusParams::new(2.0, 1.5)),
            Err(SurfaceError::Twist { .. })
        ));
        assert!(build_torus(TorusParams::new(2.0, 1.0)).is_ok());
        assert!(matches!(
            build_torus(TorusParams::new(1.0, 0.0).with_seam(0.5)),
            Err(SurfaceError::Construction(_))
        ));
        assert!(build_torus(TorusParams::new(0.5, 0.0)).is_ok());
    }

    #[test]
    fn torus_basepoint_on_boundary_perpendicular() {
        for l in [0.5, 2.0, 4.0, 7.0] {
            let g = build_torus(TorusParams::new(l, 0.0)).unwrap();
            assert_eq!(g.basepoint.x, 0.0);
            assert!((g.basepoint.y.ln().abs() - l / 2.0).abs() < 1e-9, "l = {l}");
        }
    }

    #[test]
    fn pants_systole_depth_one() {
        let g = build_pants(PantsParams::symmetric(4.0)).unwrap();
        let s = systole_estimate(&g, 1).unwrap();
        assert!((s.length - 4.0).abs() < 1e-9);
        assert_eq!(s.word.to_string(), "A");
        assert!(s.minimizers.iter().any(|w| w.to_string() == "B"));
    }

    #[test]
    fn torus_systole_candidates() {
        let g = build_torus(TorusParams::new(4.0, 0.0)).unwrap();
        let s = systole_estimate(&g, 6).unwrap();
        assert!(s.length <= 4.0 + 1e-9);
        assert_eq!(s.word.to_string(), "A");
    }

    #[test]
    fn systole_nonincreasing_and_conjugation_invariant() {
        let g = build_torus(TorusParams::new(3.0, 0.7)).unwrap();
        let mut prev = f64::INFINITY;
        for d in 1..=8 {
            let s = systole_estimate(&g, d).unwrap().length;
            assert!(s <= prev);
            prev = s;
        }
        let h = Isometry::new(1.3, 0.4, -0.2, 0.7);
        let conj = g.conjugated(&h).unwrap();
        let a = systole_estimate(&g, 8).unwrap();
        let b = systole_estimate(&conj, 8).unwrap();
        assert!((a.length - b.length).abs() < 1e-10);
        assert_eq!(a.word, b.word);
    }

    #[test]
    fn threshold_sign_change() {
        let t = torus_threshold();
        assert!(lemma3_gap(2.696) > 0.0);
        assert!(lemma3_gap(1.0) < 0.0);
        // independent sign scan on a 1e-4 grid
        let mut scan = None;
        let mut s = 1.0;
        while s < 5.0 {
            if lemma3_gap(s) < 0.0 && lemma3_gap(s + 1e-4) >= 0.0 {
                scan = Some(s);
            }
            s += 1e-4;
        }
        let scan = scan.unwrap();
        assert!((t - scan).abs() < 2e-4);
        assert!(lemma3_gap(t - 1e-6) < 0.0 && lemma3_gap(t + 1e-6) > 0.0);
        assert!(t < 2.696);
    }

    #[test]
    fn lemma3_small_torus_has_no_hypothesis() {
        let c = lemma3_check(TorusParams::new(0.5, 0.0), 8).unwrap();
        assert!(!c.threshold_ok);
        assert!(!c.violated());
    }

    #[test]
    fn lemma3_large_torus() {
        let c = lemma3_check(TorusParams::new(3.5, 0.0), 12).unwrap();
        if c.threshold_ok {
            assert!(c.conclusion_ok);
        }
    }
}

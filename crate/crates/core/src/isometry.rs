//! Orientation-preserving isometries of the upper half-plane.
//!
//! An isometry is stored as a real 2x2 matrix of determinant 1. Since `M`
//! and `-M` act identically, every matrix is sign-normalized to a canonical
//! lift with positive trace.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hyptrig::acosh1p;

/// Half-width of the band around `|tr| = 2` treated as parabolic.
pub const TRACE_BAND: f64 = 1e-9;
/// Entry tolerance for recognizing the identity and a vanishing trace.
pub const ENTRY_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IsometryError {
    #[error("point ({x}, {y}) is not in the upper half-plane")]
    NotInPlane { x: f64, y: f64 },
    #[error("isometry is {0:?}, not hyperbolic")]
    NotHyperbolic(Kind),
}

/// Conjugacy type of an isometry, read off the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self, IsometryError> {
        if !(x.is_finite() && y.is_finite() && y > 0.0) {
            return Err(IsometryError::NotInPlane { x, y });
        }
        Ok(PlanePoint { x, y })
    }

    /// The point `i`.
    pub const I: PlanePoint = PlanePoint { x: 0.0, y: 1.0 };
}

/// Hyperbolic distance.
pub fn distance(p: PlanePoint, q: PlanePoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    acosh1p((dx * dx + dy * dy) / (2.0 * p.y * q.y))
}

/// Compositions between two determinant renormalizations in a chain.
pub const RENORMALIZE_EVERY: usize = 32;

/// Determinant-one matrix `[[m11, m12], [m21, m22]]` with canonical sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
    };

    /// Build from raw entries, rescaling to determinant one.
    ///
    /// Panics if the determinant is not positive: such a matrix does not
    /// act on the upper half-plane.
    pub fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        let det = m11 * m22 - m12 * m21;
        assert!(
            det > 0.0 && det.is_finite(),
            "matrix with determinant {det} is not an isometry"
        );
        Isometry { m11, m12, m21, m22 }.renormalized()
    }

    /// Translation by `length` along the imaginary axis, towards infinity.
    pub fn axial(length: f64) -> Self {
        let e = (length / 2.0).exp();
        Isometry {
            m11: e,
            m12: 0.0,
            m21: 0.0,
            m22: 1.0 / e,
        }
    }

    /// Translation by `length` along the unit semicircle, from `-1` towards `1`.
    pub fn transverse(length: f64) -> Self {
        let (s, c) = ((length / 2.0).sinh(), (length / 2.0).cosh());
        Isometry {
            m11: c,
            m12: s,
            m21: s,
            m22: c,
        }
    }

    /// Rotation by `angle` about `i`.
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = (angle / 2.0).sin_cos();
        Isometry::new(c, s, -s, c)
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22
    }

    /// Divide by `sqrt(det)` and fix the sign.
    ///
    /// The determinant is computed from the entries, so this is only
    /// meaningful while the entries are moderate; products of a few dozen
    /// factors are better left alone.
    pub fn renormalized(&self) -> Self {
        let det = self.det();
        if !(det > 0.0 && det.is_finite()) {
            return self.sign_normalized();
        }
        let k = det.sqrt().recip();
        Isometry {
            m11: self.m11 * k,
            m12: self.m12 * k,
            m21: self.m21 * k,
            m22: self.m22 * k,
        }
        .sign_normalized()
    }

    fn sign_normalized(self) -> Self {
        let mut m = self;
        let tr = m.trace();
        let flip = if tr.abs() < ENTRY_TOL {
            [m.m11, m.m12, m.m21, m.m22]
                .into_iter()
                .find(|v| *v != 0.0)
                .is_some_and(|v| v < 0.0)
        } else {
            tr < 0.0
        };
        if flip {
            m = Isometry {
                m11: -m.m11,
                m12: -m.m12,
                m21: -m.m21,
                m22: -m.m22,
            };
        }
        m
    }

    /// Product of a chain of isometries, renormalized every
    /// [`RENORMALIZE_EVERY`] factors.
    pub fn product<'a, I: IntoIterator<Item = &'a Isometry>>(factors: I) -> Isometry {
        factors
            .into_iter()
            .enumerate()
            .fold(Isometry::IDENTITY, |acc, (i, g)| {
                let next = acc.compose(g);
                if (i + 1) % RENORMALIZE_EVERY == 0 {
                    next.renormalized()
                } else {
                    next
                }
            })
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            m11: self.m11 * other.m11 + self.m12 * other.m21,
            m12: self.m11 * other.m12 + self.m12 * other.m22,
            m21: self.m21 * other.m11 + self.m22 * other.m21,
            m22: self.m21 * other.m12 + self.m22 * other.m22,
        }
        .sign_normalized()
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            m11: self.m22,
            m12: -self.m12,
            m21: -self.m21,
            m22: self.m11,
        }
        .sign_normalized()
    }

    /// `h * self * h^-1`.
    pub fn conjugate(&self, h: &Isometry) -> Isometry {
        h.compose(self).compose(&h.inverse())
    }

    /// `self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Isometry) -> Isometry {
        self.compose(other)
            .compose(&self.inverse())
            .compose(&other.inverse())
    }

    pub fn pow(&self, n: usize) -> Isometry {
        Isometry::product(std::iter::repeat_n(self, n))
    }

    /// Moebius action `z -> (m11 z + m12) / (m21 z + m22)`.
    pub fn apply(&self, p: PlanePoint) -> Result<PlanePoint, IsometryError> {
        let re = self.m21 * p.x + self.m22;
        let im = self.m21 * p.y;
        let denom = re * re + im * im;
        let x = ((self.m11 * p.x + self.m12) * re + self.m11 * self.m21 * p.y * p.y) / denom;
        let y = p.y / denom;
        PlanePoint::new(x, y)
    }

    pub fn classify(&self) -> Kind {
        let deviation = (self.m11 - 1.0)
            .abs()
            .max(self.m12.abs())
            .max(self.m21.abs())
            .max((self.m22 - 1.0).abs());
        if deviation < ENTRY_TOL {
            return Kind::Identity;
        }
        let excess = self.trace().abs() - 2.0;
        if excess > TRACE_BAND {
            Kind::Hyperbolic
        } else if excess < -TRACE_BAND {
            Kind::Elliptic
        } else {
            Kind::Parabolic
        }
    }

    /// `2 arccosh(|tr| / 2)` for hyperbolic isometries.
    pub fn translation_length(&self) -> Result<f64, IsometryError> {
        match self.classify() {
            Kind::Hyperbolic => Ok(2.0 * acosh1p(self.trace().abs() / 2.0 - 1.0)),
            kind => Err(IsometryError::NotHyperbolic(kind)),
        }
    }

    /// Fixed points on the real line of a hyperbolic isometry, repelling
    /// first. `None` stands for the point at infinity.
    pub fn fixed_points(&self) -> Result<(Option<f64>, Option<f64>), IsometryError> {
        let kind = self.classify();
        if kind != Kind::Hyperbolic {
            return Err(IsometryError::NotHyperbolic(kind));
        }
        let (a, b, c, d) = (self.m11, self.m12, self.m21, self.m22);
        if c.abs() < ENTRY_TOL * (a.abs() + d.abs()) {
            // z -> (a z + b) / d fixes infinity and b / (d - a).
            let finite = Some(b / (d - a));
            return Ok(if a.abs() > d.abs() {
                (finite, None)
            } else {
                (None, finite)
            });
        }
        // c z^2 + (d - a) z - b = 0
        let tr = a + d;
        let disc = (tr * tr - 4.0).sqrt();
        let z1 = (a - d + disc) / (2.0 * c);
        let z2 = (a - d - disc) / (2.0 * c);
        // derivative at a fixed point is 1/(c z + d)^2: attracting iff |c z + d| > 1
        if (c * z1 + d).abs() > 1.0 {
            Ok((Some(z2), Some(z1)))
        } else {
            Ok((Some(z1), Some(z2)))
        }
    }
}

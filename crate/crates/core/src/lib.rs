//! Hyperbolic trigonometry and Fuchsian-group numerics for pairs of pants
//! and one-holed tori.
//!
//! * [`hyptrig`]: right-angled hexagons and their inequalities.
//! * [`isometry`]: upper half-plane isometries, distances, traces.
//! * [`surfaces`]: explicit group models, systole estimates, the
//!   boundary-versus-systole check for one-holed tori.
//! * [`poincare`]: orbit enumeration, truncated Poincare series, critical
//!   exponent estimates and majorants.
//! * [`constants`]: bisection and the report of published constants.
//! * [`cli`]: the command-line front end behind the `systolic` binary.
//!
//! See `examples/` for one runnable program per capability.

pub mod cli;
pub mod constants;
pub mod hyptrig;
pub mod isometry;
pub mod poincare;
pub mod rng;
pub mod surfaces;
pub mod words;

pub use hyptrig::{solve_hexagon, RightHexagon};
pub use isometry::{Isometry, Kind, PlanePoint};
pub use poincare::{truncated_series, SeriesReport};
pub use surfaces::{build_pants, build_torus, PantsParams, SurfaceGroup, TorusParams};
pub use words::Word;

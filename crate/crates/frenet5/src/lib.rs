//! Local differential geometry of transversal intersection curves of four
//! parametric hypersurfaces in five-dimensional Euclidean space.
//!
//! The crate is organized bottom-up:
//!
//! * [`expr`] — a small closed-form expression language over `u1..u4` with
//!   exact symbolic partial derivatives to order 5;
//! * [`linalg`] — fixed-size vectors in R^5, the quadruple vector product,
//!   4x4 linear solves, and Gram–Schmidt orthonormalization;
//! * [`surface`] — parametric hypersurfaces R^4 -> R^5, their jets, unit
//!   normals, and fundamental forms;
//! * [`curve`] — the curve apparatus: tangent, higher arc-length derivatives,
//!   Frenet frame `{t, n, b1, b2, b3}`, and curvatures `k1..k4`;
//! * [`darboux`] — per-surface Darboux frames, geodesic curvature, and the
//!   three geodesic torsions;
//! * [`tracer`] — a predictor–corrector marcher along the intersection curve
//!   plus a finite-difference curvature oracle built on traced points;
//! * [`scene`] — the JSON scene description shared with the CLI.

pub mod curve;
pub mod darboux;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod surface;
pub mod tracer;

pub use error::{Error, Result};

//! Gauss maps of rotational hypersurfaces in 4-dimensional Lorentz-Minkowski
//! space under the second-order operators L1 (Cheng-Yau) and L2.
//!
//! The crate evaluates L_k N for the three rotational families (spacelike,
//! timelike, lightlike axis) along three independent routes and checks them
//! against each other:
//!
//! 1. **closed** — the expanded per-axis polynomial formulas
//!    ([`closed_form`]);
//! 2. **generic** — the operator identity
//!    `L_k N = -eps C_k (grad H_{k+1} + (n H_1 H_{k+1} - (n-k-1) H_{k+2}) N)`
//!    assembled from mean curvatures and the intrinsic gradient
//!    ([`operator::lk_gauss_generic`]);
//! 3. **trace** — `L_k f = tr(P_k ∘ Hess f)` applied componentwise to the
//!    Gauss map, with Newton transformations of the numerically assembled
//!    shape operator and Christoffel symbols from exact jet derivatives
//!    ([`operator::lk_trace`]).
//!
//! On top of the operator machinery, [`classify`] decides whether a Gauss map
//! is harmonic, of first/second-kind pointwise 1-type, or of generalized
//! 1-type, and reproduces the solution families these classes come from.
//!
//! Everything is driven by exact derivative-carrying scalars ([`jet::Jet`]);
//! finite differences appear only inside test oracles.

pub mod classify;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod minkowski;
pub mod operator;
pub mod profile;
pub mod quad;
pub mod report;
pub mod sample;
pub mod surface;

pub use error::{Error, Result};
pub use jet::Jet;
pub use minkowski::{mink_dot, MinkVec4};
pub use profile::{Branch, Profile, SpecialCase};
pub use surface::{AxisKind, CurvatureData, RotSurface, SurfPoint};

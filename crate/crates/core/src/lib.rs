//! Radon transforms between dual pairs of homogeneous spaces.
//!
//! Three concrete geometries are implemented, each driven by a semidirect
//! product group `R^2 ⋊ K` acting both on the plane and on a space of
//! integration manifolds:
//!
//! * **polar lines** — the similitude group `SIM(2)` acting on `[0, π) × R`,
//!   giving the classical (polar) Radon transform;
//! * **affine lines** — the parabolic shearlet group acting on `R × R`,
//!   giving the affine Radon transform;
//! * **circles** — `SIM(2)` acting on centers and radii, giving the
//!   spherical-means Radon transform with the measure `dc dr / r^α`.
//!
//! For each geometry the crate provides the forward transform, a Fourier
//! slice oracle, the fractional multiplier that turns the transform into an
//! isometry, and a voice-transform analysis/synthesis engine that
//! reconstructs a function from its sinogram alone.

pub mod analysis;
pub mod config;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod phantom;
pub mod pipeline;
pub mod radon;
pub mod rep;
pub mod signal;
pub mod unitarize;
pub mod verify;
pub mod wavelet;

pub use error::{Error, Result};
pub use linalg::{Mat2, Vec2};

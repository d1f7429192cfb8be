//! The three forward Radon transforms and their Fourier slice oracles.

mod sinogram;
mod slice;
mod transforms;

pub use sinogram::{geometric_radii, AffineSinogram, CircularSinogram, PolarSinogram};
pub use slice::{slice_check_affine, slice_check_circular, slice_check_polar};
pub use transforms::{radon_affine, radon_circular, radon_polar};

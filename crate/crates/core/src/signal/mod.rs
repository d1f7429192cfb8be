//! Sampled-function infrastructure: grids, unitary DFTs, interpolation,
//! line/circle quadrature, Bessel J0, adaptive quadrature and the
//! spherical-means constant `c_α`.

mod bessel;
mod calpha;
mod fft;
mod grid;
mod integrate;
mod interp;
mod quad;

/// Crate-internal interpolation primitives shared with the representation
/// and analysis machinery.
pub(crate) mod interp_internals {
    pub(crate) use super::interp::{bilinear_strided, cubic_sample, linear_lattice};
}

pub use bessel::{bessel_j0, bessel_j0_series};
pub use calpha::{c_alpha, c_alpha_midpoint, k_alpha};
pub use fft::{dft1_inverse_rows, dft1_rows, dft2_inverse, dft2_unitary, Axis1d, Spectrum};
pub use grid::{Grid2, Image};
pub use integrate::{circle_integral, line_integral_arclength, line_integral_graph};
pub use interp::bilinear_sample;
pub use quad::{adaptive_quad, adaptive_quad_segmented, QuadratureResult};

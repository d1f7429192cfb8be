//! Voice-transform analysis and synthesis: discretized group grids,
//! analysis against sinogram-side windows, the low-pass split, and the
//! synthesis engine that rebuilds images from coefficient fields.

mod backproject;
mod grid;
mod kernels;
mod voice;
mod window;

pub use backproject::{
    affine_coefficient_direct, for_each_plane_affine, for_each_plane_circular,
    for_each_plane_polar, lowpass_coefficients_polar, polar_coefficient_direct,
    sinogram_analyze_affine, sinogram_analyze_circular, sinogram_analyze_polar,
};
pub use grid::{CoefficientField, GroupGrid, GroupKind};
pub use kernels::kernel_hat;
pub use voice::{synthesize, voice_analyze, voice_coefficient_direct};
pub use window::{make_phi_lowpass, make_psi_affine, make_psi_circular, make_psi_polar};

//! Sinogram-side analysis windows `Ψ = I² R ψ` and the low-pass `Φ`.

use crate::error::{Error, Result};
use crate::radon::{radon_affine, radon_circular, radon_polar, AffineSinogram, CircularSinogram, PolarSinogram};
use crate::signal::{adaptive_quad_segmented, dft2_inverse, dft2_unitary, k_alpha, Axis1d, Grid2, Image};
use crate::unitarize::{apply_i_affine, apply_i_polar};
use crate::wavelet::{WaveletForm, WaveletSpec};

/// Polar window `Ψ = I² R^pol ψ`: the wavelet is sampled on `psi_grid`,
/// transformed, and ramp-filtered (`|τ|` in the offset variable).
pub fn make_psi_polar(
    psi: &WaveletSpec,
    psi_grid: Grid2,
    n_theta: usize,
    t_axis: Axis1d,
    step: f64,
) -> PolarSinogram {
    let img = psi.to_image(psi_grid);
    let sino = radon_polar(&img, n_theta, t_axis, step);
    apply_i_polar(&apply_i_polar(&sino))
}

/// Affine window `Ψ = I² R^aff ψ`.
pub fn make_psi_affine(
    psi: &WaveletSpec,
    psi_grid: Grid2,
    v_axis: Axis1d,
    t_axis: Axis1d,
    step: f64,
) -> AffineSinogram {
    let img = psi.to_image(psi_grid);
    let sino = radon_affine(&img, v_axis, t_axis, step);
    apply_i_affine(&apply_i_affine(&sino))
}

/// Circular window `Ψ = I² R^cir ψ = k_α² |τ|^{1-α} R^cir ψ` over the
/// center frequencies.
pub fn make_psi_circular(
    psi: &WaveletSpec,
    cgrid: Grid2,
    radii: Vec<f64>,
    alpha: f64,
    nphi: usize,
) -> Result<CircularSinogram> {
    let img = psi.to_image(cgrid);
    let sino = radon_circular(&img, cgrid, radii, alpha, nphi)?;
    let k2 = k_alpha(alpha)?.powi(2);
    let exponent = 1.0 - alpha;
    let mut out = CircularSinogram::zeros(sino.cgrid, sino.radii.clone(), alpha)?;
    for ir in 0..sino.nr() {
        let slice = Image { grid: cgrid, samples: sino.r_slice(ir) };
        let mut spec = dft2_unitary(&slice);
        for k1 in 0..cgrid.n1 {
            for k2i in 0..cgrid.n2 {
                let norm = spec.freq(k1, k2i).norm();
                let f = if norm == 0.0 { 0.0 } else { k2 * norm.powf(exponent) };
                spec.samples[k1 * cgrid.n2 + k2i] *= f;
            }
        }
        out.set_r_slice(ir, &dft2_inverse(&spec).samples);
    }
    Ok(out)
}

/// The `(φ, a < a_cut)` part of the SIM(2) admissibility integral at a
/// fixed frequency, by adaptive quadrature in the scale. The rotation
/// integral is `2π` exactly because the generator is isotropic.
pub fn scale_integral_below(psi: &WaveletSpec, a_cut: f64, xi_norm: f64) -> Result<f64> {
    if xi_norm == 0.0 {
        return Ok(0.0);
    }
    // the integrand peaks near a ≈ 0.3/|ξ|; seed the quadrature there
    let peak = (0.3 / xi_norm).min(a_cut);
    let mut breaks = vec![0.0, 0.25 * peak, 0.5 * peak, peak];
    for mult in [2.0, 4.0, 8.0] {
        if mult * peak < a_cut {
            breaks.push(mult * peak);
        }
    }
    if a_cut > breaks[breaks.len() - 1] {
        breaks.push(a_cut);
    }
    let q = adaptive_quad_segmented(
        |a| {
            if a == 0.0 {
                0.0
            } else {
                let v = psi.f_hat(crate::linalg::Vec2::new(a * xi_norm, 0.0));
                v * v / a
            }
        },
        &breaks,
        1e-10,
    )?;
    Ok(std::f64::consts::TAU * q.value)
}

/// Low-pass window `Φ` with `|FΦ(ξ)|² = 1 - ∫_{φ, a < a_cut} |Fψ(...)|²`,
/// built by per-node quadrature on the grid's frequency lattice. Only the
/// isotropic generator is supported; small negative excursions of the
/// partition residual are clamped, anything below -1e-3 signals a broken
/// admissibility normalization.
pub fn make_phi_lowpass(psi: &WaveletSpec, a_cut: f64, grid: Grid2) -> Result<Image> {
    if !matches!(psi.form, WaveletForm::IsotropicGaussDerivative) {
        return Err(Error::FamilyMismatch(
            "the low-pass construction requires the isotropic SIM(2) generator".into(),
        ));
    }
    if a_cut <= 0.0 {
        return Err(Error::invalid("a_cut must be positive"));
    }
    let mut spec = dft2_unitary(&Image::zeros(grid));
    for k1 in 0..grid.n1 {
        for k2 in 0..grid.n2 {
            let xi = spec.freq(k1, k2);
            let z = 1.0 - scale_integral_below(psi, a_cut, xi.norm())?;
            if z < -1e-3 {
                return Err(Error::InconsistentWindow(format!(
                    "partition residual {z} at |ξ| = {}; admissibility normalization broken",
                    xi.norm()
                )));
            }
            spec.samples[k1 * grid.n2 + k2] = num_complex::Complex64::new(z.max(0.0).sqrt(), 0.0);
        }
    }
    Ok(dft2_inverse(&spec))
}

//! Admissible vectors: a 2D directional wavelet for SIM(2) and a separable
//! shearlet generator, both given by frequency-domain closed forms with a
//! numerically verified admissibility normalization.

use crate::error::{Error, Result};
use crate::linalg::Vec2;
use crate::signal::{adaptive_quad, adaptive_quad_segmented, dft2_inverse, dft2_unitary, Grid2, Image};
use std::f64::consts::PI;

/// Smooth bump on `(-1, 1)`: `exp(1 - 1/(1-u²))`, peak value 1.
pub fn bump(u: f64) -> f64 {
    if u.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - u * u)).exp()
    }
}

/// Closed-form frequency profiles of the two generators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WaveletForm {
    /// `F ψ(ξ) = √2 |ξ| e^{-π|ξ|²}`; satisfies the SIM(2) admissibility
    /// integral `∫ |Fψ|²/|ξ|² dξ = 1` exactly.
    IsotropicGaussDerivative,
    /// `F ψ(ξ) = c₁ |ξ₁| e^{-πξ₁²} · bump(ξ₂/ξ₁)` with `c₁` fixed so that
    /// the shearlet admissibility integral `∫ |Fψ|²/ξ₁² dξ = 1`.
    SeparableShearlet { c1: f64 },
}

/// An admissible mother wavelet: closed form plus the normalization that
/// makes the family's admissibility integral equal to one.
#[derive(Debug, Clone, Copy)]
pub struct WaveletSpec {
    pub form: WaveletForm,
    /// Multiplies the closed form; kept explicit so the numeric
    /// admissibility check is visible in the constructors.
    pub normalization: f64,
}

impl WaveletSpec {
    /// Frequency-domain value `F ψ(ξ)` (real for both forms).
    pub fn f_hat(&self, xi: Vec2) -> f64 {
        self.normalization
            * match self.form {
                WaveletForm::IsotropicGaussDerivative => {
                    let r2 = xi.norm_sq();
                    std::f64::consts::SQRT_2 * r2.sqrt() * (-PI * r2).exp()
                }
                WaveletForm::SeparableShearlet { c1 } => {
                    if xi.x == 0.0 {
                        0.0
                    } else {
                        c1 * xi.x.abs() * (-PI * xi.x * xi.x).exp() * bump(xi.y / xi.x)
                    }
                }
            }
    }

    /// The 1D factors of the separable form: `F ψ₁(ω) = c₁|ω|e^{-πω²}` and
    /// the shear window `ψ₂ = bump`. Errors on the isotropic form.
    pub fn separable_factors(&self) -> Result<(impl Fn(f64) -> f64 + '_, impl Fn(f64) -> f64)> {
        match self.form {
            WaveletForm::SeparableShearlet { c1 } => {
                let norm = self.normalization;
                Ok((
                    move |omega: f64| norm * c1 * omega.abs() * (-PI * omega * omega).exp(),
                    bump,
                ))
            }
            _ => Err(Error::FamilyMismatch("wavelet is not the separable form".into())),
        }
    }

    /// Spatial samples on a grid, by inverse transform of the closed form.
    pub fn to_image(&self, grid: Grid2) -> Image {
        let mut spec = dft2_unitary(&Image::zeros(grid));
        for k1 in 0..grid.n1 {
            for k2 in 0..grid.n2 {
                let xi = spec.freq(k1, k2);
                spec.samples[k1 * grid.n2 + k2] =
                    num_complex::Complex64::new(self.f_hat(xi), 0.0);
            }
        }
        dft2_inverse(&spec)
    }

    /// Numeric SIM(2) admissibility integral `∫ |Fψ(ξ)|²/|ξ|² dξ`,
    /// evaluated in polar coordinates with adaptive quadrature.
    pub fn admissibility_sim2(&self) -> Result<f64> {
        // ∫_0^{2π} dφ ∫_0^∞ |Fψ(τ w(φ))|²/τ dτ; 64 angular nodes are exact
        // for the isotropic form and spectrally accurate for the bump.
        let n_phi = 64;
        let mut total = 0.0;
        for i in 0..n_phi {
            let phi = std::f64::consts::TAU * i as f64 / n_phi as f64;
            let w = Vec2::unit(phi);
            let radial = adaptive_quad_segmented(
                |tau| {
                    if tau == 0.0 {
                        0.0
                    } else {
                        self.f_hat(w * tau).powi(2) / tau
                    }
                },
                &[0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 12.0],
                1e-10,
            )?;
            total += radial.value;
        }
        Ok(total * std::f64::consts::TAU / n_phi as f64)
    }

    /// Numeric shearlet admissibility integral `∫ |Fψ(ξ)|²/ξ₁² dξ` by
    /// iterated adaptive quadrature.
    pub fn admissibility_shearlet(&self) -> Result<f64> {
        // inner integral over ξ₂ at fixed ξ₁, outer over ξ₁ > 0, doubled
        let outer = adaptive_quad_segmented(
            |x1| {
                if x1 == 0.0 {
                    return 0.0;
                }
                let inner = adaptive_quad(
                    |x2| self.f_hat(Vec2::new(x1, x2)).powi(2) / (x1 * x1),
                    -1.05 * x1.abs(),
                    1.05 * x1.abs(),
                    1e-12,
                )
                .map(|q| q.value)
                .unwrap_or(f64::NAN);
                inner
            },
            &[0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0],
            1e-9,
        )?;
        Ok(2.0 * outer.value)
    }
}

/// The SIM(2) directional wavelet. The closed form is admissible exactly;
/// construction re-checks numerically to 1e-3 and fails loudly otherwise.
pub fn make_sim2_wavelet() -> Result<WaveletSpec> {
    let spec = WaveletSpec { form: WaveletForm::IsotropicGaussDerivative, normalization: 1.0 };
    let integral = spec.admissibility_sim2()?;
    if (integral - 1.0).abs() > 1e-3 {
        return Err(Error::InconsistentWindow(format!(
            "SIM(2) admissibility integral came out {integral}, expected 1"
        )));
    }
    Ok(spec)
}

/// The separable shearlet generator, normalized numerically so that the
/// admissibility integral equals one.
pub fn make_shearlet() -> Result<WaveletSpec> {
    // raw integral with c1 = 1: B · ∫ ω² e^{-2πω²} / |ω| dω = B/(2π)
    let raw = WaveletSpec { form: WaveletForm::SeparableShearlet { c1: 1.0 }, normalization: 1.0 };
    let raw_integral = raw.admissibility_shearlet()?;
    let c1 = raw_integral.sqrt().recip();
    let spec = WaveletSpec { form: WaveletForm::SeparableShearlet { c1 }, normalization: 1.0 };
    let check = spec.admissibility_shearlet()?;
    if (check - 1.0).abs() > 1e-3 {
        return Err(Error::InconsistentWindow(format!(
            "shearlet admissibility integral came out {check} after normalization"
        )));
    }
    Ok(spec)
}

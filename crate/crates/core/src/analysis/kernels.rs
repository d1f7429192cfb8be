//! Frequency-domain kernels of the translated/dilated wavelet families.

use super::grid::GroupKind;
use crate::linalg::{Mat2, Vec2};
use crate::wavelet::WaveletSpec;

/// `F[π(0, angle, a) ψ](ξ)`, real for both generator forms.
///
/// SIM(2): `a · Fψ(a R_{-φ} ξ)`. Shearlet: `|a|^{3/4} · Fψ(A_a N_s^T ξ)`.
pub fn kernel_hat(kind: GroupKind, psi: &WaveletSpec, angle: f64, scale: f64, xi: Vec2) -> f64 {
    match kind {
        GroupKind::Sim2 => {
            let rotated = Mat2::rotation(-angle).apply(xi) * scale;
            scale * psi.f_hat(rotated)
        }
        GroupKind::Shearlet => {
            let a = scale;
            let arg = Vec2::new(a * xi.x, a.signum() * a.abs().sqrt() * (xi.y - angle * xi.x));
            a.abs().powf(0.75) * psi.f_hat(arg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::adaptive_quad;
    use crate::wavelet::{make_shearlet, make_sim2_wavelet};

    #[test]
    fn sim2_calderon_sum_is_one_in_band() {
        // ∫∫ |Fψ(A_a R_φ^{-1} ξ)|² dφ da/a = 1 for every ξ ≠ 0; the kernel
        // includes the π normalization a, and the Haar cell |a|^{-3}ΔφΔa
        // reduces the sum to exactly that integral.
        let psi = make_sim2_wavelet().unwrap();
        let xi = Vec2::new(0.9, -0.4);
        let integral = adaptive_quad(
            |ln_a| {
                let a = ln_a.exp();
                let k = kernel_hat(GroupKind::Sim2, &psi, 0.3, a, xi);
                // |kern|² a^{-3} · a  (dφ integral is 2π by isotropy; da = a d ln a)
                k * k * a.powi(-3) * a
            },
            -12.0,
            6.0,
            1e-10,
        )
        .unwrap()
        .value
            * std::f64::consts::TAU;
        assert!((integral - 1.0).abs() <= 1e-6, "Calderón integral {integral}");
    }

    #[test]
    fn shearlet_calderon_sum_is_one_in_cone() {
        let psi = make_shearlet().unwrap();
        let xi = Vec2::new(1.1, 0.3);
        // ∫∫ |kern(s,a,ξ)|² |a|^{-3} ds da = 1 for ξ in the reachable cone
        let mut total = 0.0;
        for sign in [1.0f64, -1.0] {
            // the s-support is |s - ξ2/ξ1| ≤ √|a| and the scale bump sits
            // near |a ξ1| ≈ 0.3, so seed both quadratures there
            let s0 = xi.y / xi.x;
            let ln_peak = (0.3 / xi.x.abs()).ln();
            let inner = crate::signal::adaptive_quad_segmented(
                |ln_a: f64| {
                    let a = sign * ln_a.exp();
                    let w = a.abs().sqrt();
                    let s_int = crate::signal::adaptive_quad_segmented(
                        |s| {
                            let k = kernel_hat(GroupKind::Shearlet, &psi, s, a, xi);
                            k * k
                        },
                        &[s0 - w, s0 - 0.5 * w, s0, s0 + 0.5 * w, s0 + w],
                        1e-12,
                    )
                    .map(|q| q.value)
                    .unwrap_or(f64::NAN);
                    s_int * a.abs().powi(-3) * a.abs()
                },
                &[ln_peak - 6.0, ln_peak - 2.0, ln_peak - 1.0, ln_peak, ln_peak + 1.0, ln_peak + 2.5],
                1e-9,
            )
            .unwrap()
            .value;
            total += inner;
        }
        assert!((total - 1.0).abs() <= 1e-4, "shearlet Calderón integral {total}");
    }
}

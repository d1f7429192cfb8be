//! The semi-invariant multipliers that turn each Radon transform into an
//! isometry, and the fractional multiplier family `A_s` on images.
//!
//! Polar and affine sinograms get the half-ramp `|τ|^{1/2}` in the offset
//! variable; circular sinograms get `k_α |τ|^{(1-α)/2}` over the center
//! frequencies. The zero-frequency bin is mapped to zero: positive
//! exponents vanish there in the continuum, and negative exponents are only
//! admitted on zero-mean data.

use crate::error::{Error, Result};
use crate::radon::{AffineSinogram, CircularSinogram, PolarSinogram};
use crate::signal::{
    bessel_j0, dft1_inverse_rows, dft1_rows, dft2_inverse, dft2_unitary, k_alpha, Axis1d, Image,
};
use num_complex::Complex64;
use std::f64::consts::TAU;

fn multiply_rows(
    samples: &[Complex64],
    nrows: usize,
    axis: &Axis1d,
    exponent: f64,
    scale: f64,
) -> Vec<Complex64> {
    let mut spec = dft1_rows(samples, nrows, axis);
    let factors: Vec<f64> = (0..axis.n)
        .map(|k| {
            let tau = axis.freq(k);
            if tau == 0.0 {
                0.0
            } else {
                scale * tau.abs().powf(exponent)
            }
        })
        .collect();
    for row in spec.chunks_mut(axis.n) {
        for (z, &f) in row.iter_mut().zip(&factors) {
            *z *= f;
        }
    }
    dft1_inverse_rows(&spec, nrows, axis)
}

/// `(I ⊗ F) I F(θ, τ) = |τ|^{1/2} (I ⊗ F) F(θ, τ)` on polar sinograms.
pub fn apply_i_polar(sino: &PolarSinogram) -> PolarSinogram {
    PolarSinogram {
        n_theta: sino.n_theta,
        t_axis: sino.t_axis,
        samples: multiply_rows(&sino.samples, sino.n_theta, &sino.t_axis, 0.5, 1.0),
    }
}

/// Same half-ramp multiplier on affine sinograms.
pub fn apply_i_affine(sino: &AffineSinogram) -> AffineSinogram {
    AffineSinogram {
        v_axis: sino.v_axis,
        t_axis: sino.t_axis,
        samples: multiply_rows(&sino.samples, sino.v_axis.n, &sino.t_axis, 0.5, 1.0),
    }
}

/// `(F ⊗ I) I F(τ, r) = k_α |τ|^{(1-α)/2} (F ⊗ I) F(τ, r)` on circular
/// sinograms, per radius slice over the center frequencies.
pub fn apply_i_circular(sino: &CircularSinogram) -> Result<CircularSinogram> {
    let k = k_alpha(sino.alpha)?;
    apply_i_circular_with(sino, k)
}

/// [`apply_i_circular`] with a precomputed `k_α`.
pub fn apply_i_circular_with(sino: &CircularSinogram, k_alpha: f64) -> Result<CircularSinogram> {
    let exponent = (1.0 - sino.alpha) / 2.0;
    let mut out = CircularSinogram::zeros(sino.cgrid, sino.radii.clone(), sino.alpha)?;
    for ir in 0..sino.nr() {
        let slice = Image { grid: sino.cgrid, samples: sino.r_slice(ir) };
        let mut spec = dft2_unitary(&slice);
        for k1 in 0..sino.cgrid.n1 {
            for k2 in 0..sino.cgrid.n2 {
                let xi = spec.freq(k1, k2);
                let norm = xi.norm();
                let f = if norm == 0.0 { 0.0 } else { k_alpha * norm.powf(exponent) };
                spec.samples[k1 * sino.cgrid.n2 + k2] *= f;
            }
        }
        out.set_r_slice(ir, &dft2_inverse(&spec).samples);
    }
    Ok(out)
}

/// The fractional multiplier `F A_s f(ξ) = |ξ|^s F f(ξ)`. For negative `s`
/// the input must be zero-mean (DC below `1e-10 · ‖f‖`), otherwise the
/// operation is not defined on the discrete grid.
pub fn apply_as(img: &Image, s: f64) -> Result<Image> {
    let mut spec = dft2_unitary(img);
    if s < 0.0 {
        let dc = spec.at(img.grid.n1 / 2, img.grid.n2 / 2).norm();
        if dc > 1e-10 * img.l2_norm().max(f64::MIN_POSITIVE) {
            return Err(Error::domain(format!(
                "A_s with s = {s} needs zero-mean input; DC magnitude is {dc:e}"
            )));
        }
    }
    for k1 in 0..img.grid.n1 {
        for k2 in 0..img.grid.n2 {
            let norm = spec.freq(k1, k2).norm();
            let f = if norm == 0.0 { 0.0 } else { norm.powf(s) };
            spec.samples[k1 * img.grid.n2 + k2] *= f;
        }
    }
    Ok(dft2_inverse(&spec))
}

/// `Q f = I R^pol f` isometry diagnostic: returns
/// `‖I R^pol f‖_{L²(dθ dt)} / ‖f‖`, which the unitarization theory pins
/// at 1.
pub fn polar_isometry_ratio(img: &Image, sino: &PolarSinogram) -> f64 {
    apply_i_polar(sino).l2_norm() / img.l2_norm()
}

/// Affine counterpart of [`polar_isometry_ratio`]. Meaningful only for
/// inputs whose spectrum avoids the vertical axis (cone-restricted).
pub fn affine_isometry_ratio(img: &Image, sino: &AffineSinogram) -> f64 {
    apply_i_affine(sino).l2_norm() / img.l2_norm()
}

/// Circular isometry diagnostic `‖I R^cir f‖_{L²(dc r^{-α} dr)} / ‖f‖`.
///
/// The stored radius window `[r_min, r_max]` cannot hold the whole measure:
/// the `r^{-α}` weight concentrates mass near `r = 0` and the `J_0` tail
/// decays only like `r^{-1-α}`. Both ends are completed analytically:
/// the head from the innermost stored slice (where the integrand is flat in
/// `r`), the tail by quadrature of the slice-theorem representation against
/// the image spectrum.
pub fn circular_isometry_ratio(img: &Image, sino: &CircularSinogram) -> Result<f64> {
    let alpha = sino.alpha;
    let k = k_alpha(alpha)?;
    let transformed = apply_i_circular_with(sino, k)?;

    // stored window, trapezoid in r with the r^{-α} weight
    let body = transformed.l2_norm().powi(2);

    // head: ∫_0^{r_min} r^{-α} ‖slice(r)‖² dr with slice(r) ≈ slice(r_min)
    let r_min = sino.radii[0];
    let inner_energy: f64 = transformed.r_slice(0).iter().map(|z| z.norm_sqr()).sum::<f64>()
        * sino.cgrid.cell_area();
    let head = inner_energy * r_min.powf(1.0 - alpha) / (1.0 - alpha);
    // the trapezoid window starts at r_min, so add the missing half cell
    let half_cell = inner_energy * r_min.powf(-alpha) * (sino.radii[1] - sino.radii[0]) / 2.0;

    // tail: Σ_ξ k² |ξ|^{1-α} (2π)² J0(2π|ξ|r)² |F f(ξ)|² r^{-α} integrated
    // over r > r_max, via G(U) = ∫_U^∞ J0(u)² u^{-α} du
    let r_max = *sino.radii.last().unwrap();
    let spec = dft2_unitary(img);
    let cell = spec.axis1().freq_step() * spec.axis2().freq_step();
    let mut tail = 0.0;
    let mut g_cache = TailTable::new(alpha)?;
    for k1 in 0..img.grid.n1 {
        for k2 in 0..img.grid.n2 {
            let mag = spec.at(k1, k2).norm_sqr();
            if mag == 0.0 {
                continue;
            }
            let xi = spec.freq(k1, k2).norm();
            if xi == 0.0 {
                continue;
            }
            let u0 = TAU * xi * r_max;
            let g = g_cache.eval(u0)?;
            tail += mag * k * k * xi.powf(1.0 - alpha) * TAU * TAU * (TAU * xi).powf(alpha - 1.0) * g * cell;
        }
    }

    let total = body + head + half_cell + tail;
    Ok(total.sqrt() / img.l2_norm())
}

/// Lazily tabulated `G(U) = ∫_U^∞ J0(u)² u^{-α} du`, linear in `log U`
/// between nodes.
struct TailTable {
    alpha: f64,
    nodes: Vec<(f64, f64)>,
}

impl TailTable {
    fn new(alpha: f64) -> Result<Self> {
        Ok(TailTable { alpha, nodes: Vec::new() })
    }

    fn exact(&self, u0: f64) -> Result<f64> {
        // ∫_{u0}^∞ = analytic mean-part tail at U plus adaptive quadrature
        // up to a far cutoff where the oscillatory remainder is negligible
        let far = (u0 * 8.0).max(4096.0);
        let alpha = self.alpha;
        let mut acc = 0.0;
        let mut a = u0;
        while a < far {
            let b = (a + 64.0).min(far);
            acc += crate::signal::adaptive_quad(
                |u| bessel_j0(u).powi(2) * u.powf(-alpha),
                a,
                b,
                1e-11 * (b - a),
            )?
            .value;
            a = b;
        }
        Ok(acc + far.powf(-alpha) / (std::f64::consts::PI * alpha))
    }

    fn eval(&mut self, u0: f64) -> Result<f64> {
        // nodes at quarter-octave resolution in log2
        let key = (u0.log2() * 4.0).floor();
        let (lo, hi) = (2f64.powf(key / 4.0), 2f64.powf((key + 1.0) / 4.0));
        let g_lo = self.lookup(lo)?;
        let g_hi = self.lookup(hi)?;
        let w = (u0 / lo).ln() / (hi / lo).ln();
        Ok(g_lo * (1.0 - w) + g_hi * w)
    }

    fn lookup(&mut self, u: f64) -> Result<f64> {
        if let Some(&(_, g)) = self.nodes.iter().find(|(k, _)| (k - u).abs() < 1e-9 * u) {
            return Ok(g);
        }
        let g = self.exact(u)?;
        self.nodes.push((u, g));
        Ok(g)
    }
}

//! Test images: phantoms with known closed-form properties.

use crate::error::{Error, Result};
use crate::signal::{dft2_inverse, dft2_unitary, Grid2, Image};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Isotropic Gaussian `e^{-π|x/σ|²}`.
pub fn gaussian(grid: Grid2, sigma: f64) -> Image {
    Image::from_real_fn(grid, |p| (-PI * p.norm_sq() / (sigma * sigma)).exp())
}

/// Difference of two Gaussians with widths `σ` and `κσ`, weighted so the
/// integral vanishes: `e^{-π|x/σ|²} - κ^{-2} e^{-π|x/(κσ)|²}`. Zero-mean
/// and effectively band-limited; the workhorse admissible phantom.
pub fn dog(grid: Grid2, sigma: f64, kappa: f64) -> Image {
    let s1 = sigma * sigma;
    let s2 = (kappa * sigma) * (kappa * sigma);
    Image::from_real_fn(grid, |p| {
        let r2 = p.norm_sq();
        (-PI * r2 / s1).exp() - (s1 / s2) * (-PI * r2 / s2).exp()
    })
}

/// Indicator of the centered disk of the given radius.
pub fn disk(grid: Grid2, radius: f64) -> Result<Image> {
    let half = grid.half_width_x().min(grid.half_width_y());
    if radius > half {
        return Err(Error::invalid(format!(
            "disk radius {radius} exceeds grid half-width {half}"
        )));
    }
    if radius <= 0.0 {
        return Err(Error::invalid("disk radius must be positive"));
    }
    Ok(Image::from_real_fn(grid, |p| if p.norm() <= radius { 1.0 } else { 0.0 }))
}

/// Vertical bars of the given period across the middle band of the grid.
pub fn bars(grid: Grid2, period: f64) -> Result<Image> {
    if period <= 0.0 {
        return Err(Error::invalid("bar period must be positive"));
    }
    let hw = grid.half_width_x();
    let hh = grid.half_width_y();
    Ok(Image::from_real_fn(grid, |p| {
        let stripe = ((p.x + hw) / period).rem_euclid(1.0) < 0.5;
        if stripe && p.y.abs() <= 0.8 * hh {
            1.0
        } else {
            0.0
        }
    }))
}

fn smoothstep(t: f64) -> f64 {
    let t = t.clamp(0.0, 1.0);
    t * t * t * (t * (6.0 * t - 15.0) + 10.0)
}

/// Keep only spectral content with `|ξ2/ξ1| ≤ k1`, transitioning smoothly
/// from 1 below `k0` to 0 above `k1`. Needed by the affine family, whose
/// sinograms are square-integrable only for spectra away from the vertical
/// axis.
pub fn restrict_cone(img: &Image, k0: f64, k1: f64) -> Image {
    assert!(0.0 < k0 && k0 < k1);
    let mut spec = dft2_unitary(img);
    let g = spec.grid;
    for k1i in 0..g.n1 {
        for k2i in 0..g.n2 {
            let xi = spec.freq(k1i, k2i);
            let ratio = if xi.x == 0.0 {
                if xi.y == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                (xi.y / xi.x).abs()
            };
            let w = 1.0 - smoothstep((ratio - k0) / (k1 - k0));
            spec.samples[k1i * g.n2 + k2i] *= w;
        }
    }
    dft2_inverse(&spec)
}

/// Random smooth image that is effectively band-limited: a superposition
/// of Gaussian atoms whose width pins the spectrum below 1e-6 of its peak
/// outside `|ξ| ≤ frac · Nyquist` (componentwise), with centers kept in the
/// middle of the grid so both the field and its line integrals are well
/// resolved. Deterministic in the seed.
pub fn band_limited_random(grid: Grid2, frac: f64, seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let band = frac * (0.5 / grid.dx.max(grid.dy));
    // e^{-π s² band²} = 1e-6  =>  s = sqrt(ln 1e6 / π) / band
    let s = (1e6f64.ln() / PI).sqrt() / band;
    let reach = 0.45 * grid.half_width_x().min(grid.half_width_y());
    let atoms: Vec<(f64, f64, Complex64)> = (0..24)
        .map(|_| {
            (
                rng.gen_range(-reach..reach),
                rng.gen_range(-reach..reach),
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            )
        })
        .collect();
    Image::from_fn(grid, |p| {
        atoms
            .iter()
            .map(|&(cx, cy, amp)| {
                let dx = p.x - cx;
                let dy = p.y - cy;
                amp * (-PI * (dx * dx + dy * dy) / (s * s)).exp()
            })
            .sum()
    })
}

//! The quasi-regular representations as concrete resampling operators.
//!
//! `π` acts on images, `π̂` on sinograms; both are coordinate
//! transformations with an interpolation step and zero-padding outside the
//! stored grids, so they are faithful only up to interpolation error.

use crate::group::{ShearletElement, Sim2Element};
use crate::linalg::{Mat2, Vec2};
use crate::radon::{AffineSinogram, CircularSinogram, PolarSinogram};
use crate::signal::Image;
use num_complex::Complex64;
use std::f64::consts::PI;

mod sample {
    pub(super) use crate::signal::interp_internals::{cubic_sample, linear_lattice};
}

/// `π(b, φ, a) f(x) = a^{-1} f(A_a^{-1} R_φ^{-1} (x - b))` on SIM(2).
pub fn apply_pi_sim2(img: &Image, g: &Sim2Element) -> Image {
    let lin_inv = Mat2::dilation(1.0 / g.a) * Mat2::rotation(-g.phi);
    let scale = 1.0 / g.a;
    let mut out = Image::zeros(img.grid);
    for i1 in 0..img.grid.n1 {
        for i2 in 0..img.grid.n2 {
            let x = img.grid.point(i1, i2);
            let y = lin_inv.apply(x - g.b);
            *out.at_mut(i1, i2) = sample::cubic_sample(img, y) * scale;
        }
    }
    out
}

/// `π(b, s, a) f(x) = |a|^{-3/4} f(A_a^{-1} N_s^{-1} (x - b))` on the
/// shearlet group.
pub fn apply_pi_shear(img: &Image, g: &ShearletElement) -> Image {
    let lin_inv = g.matrix().inverse();
    let scale = g.a.abs().powf(-0.75);
    let mut out = Image::zeros(img.grid);
    for i1 in 0..img.grid.n1 {
        for i2 in 0..img.grid.n2 {
            let x = img.grid.point(i1, i2);
            let y = lin_inv.apply(x - g.b);
            *out.at_mut(i1, i2) = sample::cubic_sample(img, y) * scale;
        }
    }
    out
}

/// Evaluate a polar sinogram at an arbitrary line `(θ_raw, t)`: the angle
/// is reduced into `[0, π)` with the `(θ+π, t) ≡ (θ, -t)` identification,
/// then the stored rows are interpolated bilinearly (the row `θ = π`
/// being the flipped row 0).
pub(crate) fn sample_polar(sino: &PolarSinogram, theta_raw: f64, t: f64) -> Complex64 {
    let wraps = (theta_raw / PI).floor();
    let theta = crate::linalg::reduce_mod(theta_raw, PI);
    let sign = if (wraps as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let t = sign * t;

    let u = theta / sino.dtheta();
    let i0 = (u.floor() as usize).min(sino.n_theta - 1);
    let frac = u - i0 as f64;
    let taxis = sino.t_axis;
    let pos = |t: f64| (t - taxis.x0) / taxis.dx;
    let v0 = sample::linear_lattice(sino.row(i0), pos(t));
    if frac == 0.0 {
        return v0;
    }
    let v1 = if i0 + 1 < sino.n_theta {
        sample::linear_lattice(sino.row(i0 + 1), pos(t))
    } else {
        // wrap to row 0 with the t-flip
        sample::linear_lattice(sino.row(0), pos(-t))
    };
    v0 * (1.0 - frac) + v1 * frac
}

/// `π̂(b, φ, a) F(θ, t) = a^{-1/2} F(θ-φ, (t - w(θ)·b)/a)` on polar
/// sinograms, with the wrap-and-flip reduction of the first argument.
pub fn apply_pi_hat_polar(sino: &PolarSinogram, g: &Sim2Element) -> PolarSinogram {
    let mut out = PolarSinogram::zeros(sino.n_theta, sino.t_axis);
    let scale = g.a.powf(-0.5);
    for i in 0..sino.n_theta {
        let theta = sino.theta(i);
        let shift = Vec2::unit(theta).dot(g.b);
        for (j, t) in sino.t_axis.coords().enumerate() {
            let value = sample_polar(sino, theta - g.phi, (t - shift) / g.a);
            out.samples[i * sino.t_axis.n + j] = value * scale;
        }
    }
    out
}

pub(crate) fn sample_affine(sino: &AffineSinogram, v: f64, t: f64) -> Complex64 {
    let u = (v - sino.v_axis.x0) / sino.v_axis.dx;
    if !(0.0..=(sino.v_axis.n - 1) as f64).contains(&u) {
        return Complex64::default();
    }
    let i0 = (u.floor() as usize).min(sino.v_axis.n - 2);
    let frac = u - i0 as f64;
    let pos = (t - sino.t_axis.x0) / sino.t_axis.dx;
    let v0 = sample::linear_lattice(sino.row(i0), pos);
    let v1 = sample::linear_lattice(sino.row(i0 + 1), pos);
    v0 * (1.0 - frac) + v1 * frac
}

/// `π̂(b, s, a) F(v, t) = |a|^{-3/4} F(|a|^{-1/2}(v-s), (t - n(v)·b)/a)` on
/// affine sinograms.
pub fn apply_pi_hat_affine(sino: &AffineSinogram, g: &ShearletElement) -> AffineSinogram {
    let mut out = AffineSinogram::zeros(sino.v_axis, sino.t_axis);
    let scale = g.a.abs().powf(-0.75);
    let root_a = g.a.abs().sqrt();
    for (i, v) in sino.v_axis.coords().enumerate() {
        let v_src = (v - g.s) / root_a;
        let shift = Vec2::new(1.0, v).dot(g.b);
        for (j, t) in sino.t_axis.coords().enumerate() {
            let value = sample_affine(sino, v_src, (t - shift) / g.a);
            out.samples[i * sino.t_axis.n + j] = value * scale;
        }
    }
    out
}

fn sample_circular(sino: &CircularSinogram, c: Vec2, r: f64) -> Complex64 {
    let radii = &sino.radii;
    if r < radii[0] || r > radii[radii.len() - 1] {
        return Complex64::default();
    }
    let k = match radii.binary_search_by(|x| x.partial_cmp(&r).unwrap()) {
        Ok(k) => k.min(radii.len() - 2),
        Err(k) => k.saturating_sub(1).min(radii.len() - 2),
    };
    // linear in log r between the bracketing slices
    let w = ((r / radii[k]).ln() / (radii[k + 1] / radii[k]).ln()).clamp(0.0, 1.0);
    let g = sino.cgrid;
    let u = (c.x - g.origin.x) / g.dx;
    let v = (c.y - g.origin.y) / g.dy;
    let lo = crate::signal::interp_internals::bilinear_strided(
        &sino.samples,
        g.n1,
        g.n2,
        sino.nr(),
        k,
        u,
        v,
    );
    let hi = crate::signal::interp_internals::bilinear_strided(
        &sino.samples,
        g.n1,
        g.n2,
        sino.nr(),
        k + 1,
        u,
        v,
    );
    lo * (1.0 - w) + hi * w
}

/// `π̂(b, φ, a) F(c, r) = a^{(α-3)/2} F(a^{-1} R_{-φ}(c - b), r/a)` on
/// circular sinograms.
pub fn apply_pi_hat_circular(sino: &CircularSinogram, g: &Sim2Element) -> CircularSinogram {
    let mut out = CircularSinogram::zeros(sino.cgrid, sino.radii.clone(), sino.alpha)
        .expect("shape comes from a valid sinogram");
    let scale = g.a.powf((sino.alpha - 3.0) / 2.0);
    let lin_inv = Mat2::dilation(1.0 / g.a) * Mat2::rotation(-g.phi);
    let nr = sino.nr();
    for i1 in 0..sino.cgrid.n1 {
        for i2 in 0..sino.cgrid.n2 {
            let c = sino.cgrid.point(i1, i2);
            let c_src = lin_inv.apply(c - g.b);
            for (ir, &r) in sino.radii.iter().enumerate() {
                let value = sample_circular(sino, c_src, r / g.a);
                out.samples[(i1 * sino.cgrid.n2 + i2) * nr + ir] = value * scale;
            }
        }
    }
    out
}

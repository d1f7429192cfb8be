//! Bilinear interpolation on lattices and images.

use super::grid::Image;
use crate::linalg::Vec2;
use num_complex::Complex64;

/// Bilinear interpolation in lattice coordinates `(u, v)` on a row-major
/// `n1 x n2` array. Returns zero outside `[0, n1-1] x [0, n2-1]`.
pub(crate) fn bilinear_lattice(
    samples: &[Complex64],
    n1: usize,
    n2: usize,
    u: f64,
    v: f64,
) -> Complex64 {
    if !(0.0..=(n1 - 1) as f64).contains(&u) || !(0.0..=(n2 - 1) as f64).contains(&v) {
        return Complex64::default();
    }
    let i = (u.floor() as usize).min(n1 - 2);
    let j = (v.floor() as usize).min(n2 - 2);
    let fu = u - i as f64;
    let fv = v - j as f64;
    let s = |a: usize, b: usize| samples[a * n2 + b];
    s(i, j) * ((1.0 - fu) * (1.0 - fv))
        + s(i + 1, j) * (fu * (1.0 - fv))
        + s(i, j + 1) * ((1.0 - fu) * fv)
        + s(i + 1, j + 1) * (fu * fv)
}

fn cubic_weights(t: f64) -> [f64; 4] {
    // Catmull-Rom (cubic convolution, a = -1/2); exact for quadratics.
    let t2 = t * t;
    let t3 = t2 * t;
    [
        -0.5 * t + t2 - 0.5 * t3,
        1.0 - 2.5 * t2 + 1.5 * t3,
        0.5 * t + 2.0 * t2 - 1.5 * t3,
        -0.5 * t2 + 0.5 * t3,
    ]
}

/// Cubic-convolution sample in lattice coordinates; falls back to bilinear
/// in the outermost cell ring and to zero outside the hull. Used by the
/// line and circle quadratures, where the O(h²) bias of plain bilinear
/// sampling would dominate the error budget.
pub(crate) fn cubic_lattice(
    samples: &[Complex64],
    n1: usize,
    n2: usize,
    u: f64,
    v: f64,
) -> Complex64 {
    let iu = u.floor();
    let iv = v.floor();
    let in_core = iu >= 1.0 && iu + 2.0 <= (n1 - 1) as f64 && iv >= 1.0 && iv + 2.0 <= (n2 - 1) as f64;
    if !in_core {
        return bilinear_lattice(samples, n1, n2, u, v);
    }
    let i = iu as usize;
    let j = iv as usize;
    let wu = cubic_weights(u - iu);
    let wv = cubic_weights(v - iv);
    let mut acc = Complex64::default();
    for (a, &cu) in wu.iter().enumerate() {
        let row = (i + a - 1) * n2 + (j - 1);
        let mut inner = Complex64::default();
        for (b, &cv) in wv.iter().enumerate() {
            inner += samples[row + b] * cv;
        }
        acc += inner * cu;
    }
    acc
}

pub(crate) fn cubic_sample(img: &Image, p: Vec2) -> Complex64 {
    let g = &img.grid;
    let u = (p.x - g.origin.x) / g.dx;
    let v = (p.y - g.origin.y) / g.dy;
    cubic_lattice(&img.samples, g.n1, g.n2, u, v)
}

/// Linear interpolation of a row at fractional index `u`; zero outside.
pub(crate) fn linear_lattice(samples: &[Complex64], u: f64) -> Complex64 {
    let n = samples.len();
    if !(0.0..=(n - 1) as f64).contains(&u) {
        return Complex64::default();
    }
    let i = (u.floor() as usize).min(n - 2);
    let f = u - i as f64;
    samples[i] * (1.0 - f) + samples[i + 1] * f
}

/// Bilinear interpolation over the two leading axes of a 3D array stored
/// `(i1·n2 + i2)·stride + slot`; zero outside the lattice.
pub(crate) fn bilinear_strided(
    samples: &[Complex64],
    n1: usize,
    n2: usize,
    stride: usize,
    slot: usize,
    u: f64,
    v: f64,
) -> Complex64 {
    if !(0.0..=(n1 - 1) as f64).contains(&u) || !(0.0..=(n2 - 1) as f64).contains(&v) {
        return Complex64::default();
    }
    let i = (u.floor() as usize).min(n1 - 2);
    let j = (v.floor() as usize).min(n2 - 2);
    let fu = u - i as f64;
    let fv = v - j as f64;
    let s = |a: usize, b: usize| samples[(a * n2 + b) * stride + slot];
    s(i, j) * ((1.0 - fu) * (1.0 - fv))
        + s(i + 1, j) * (fu * (1.0 - fv))
        + s(i, j + 1) * ((1.0 - fu) * fv)
        + s(i + 1, j + 1) * (fu * fv)
}

/// Bilinear sample of an image at a physical point, exactly zero outside the
/// convex hull of the grid nodes.
pub fn bilinear_sample(img: &Image, p: Vec2) -> Complex64 {
    let g = &img.grid;
    let u = (p.x - g.origin.x) / g.dx;
    let v = (p.y - g.origin.y) / g.dy;
    bilinear_lattice(&img.samples, g.n1, g.n2, u, v)
}

//! Sinogram-side analysis: `χ(g) ⟨R f, π̂(g) Ψ⟩` for every translation on
//! the lattice, factorized as per-row correlations in the offset variable
//! followed by accumulation along the incidence sets (backprojection).
//!
//! Row correlations run in the offset-frequency domain, where the window's
//! dilation is a rescaling of its row spectra; filtered rows are sinc-
//! upsampled (×4 zero-padding) before the values at `w(θ)·b` or `n(v)·b`
//! are read off by linear interpolation.

use super::grid::{CoefficientField, GroupGrid, GroupKind};
use crate::error::{Error, Result};
use crate::linalg::{reduce_mod, Vec2};
use crate::radon::{AffineSinogram, CircularSinogram, PolarSinogram};
use crate::rep::{sample_affine, sample_polar};
use crate::signal::{
    dft1_inverse_rows, dft1_rows, dft2_unitary, interp_internals::linear_lattice, Axis1d, Spectrum,
};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

const UPSAMPLE: usize = 4;

/// Row spectra of a sinogram-like array plus the axes needed to use them.
struct RowSpectra {
    n_rows: usize,
    axis: Axis1d,
    data: Vec<Complex64>,
}

impl RowSpectra {
    fn new(samples: &[Complex64], n_rows: usize, axis: Axis1d) -> Self {
        RowSpectra { n_rows, axis, data: dft1_rows(samples, n_rows, &axis) }
    }

    fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.axis.n..(i + 1) * self.axis.n]
    }

    /// Value of row `i`'s spectrum at an arbitrary frequency, linear
    /// between bins, zero outside the band.
    fn sample(&self, i: usize, freq: f64) -> Complex64 {
        let u = (freq - self.axis.freq_origin()) / self.axis.freq_step();
        linear_lattice(self.row(i), u)
    }
}

fn upsampled_axis(axis: &Axis1d) -> Axis1d {
    Axis1d { n: axis.n * UPSAMPLE, x0: axis.x0, dx: axis.dx / UPSAMPLE as f64 }
}

/// Inverse-transform a filtered row spectrum on the 4x zero-padded
/// frequency lattice, yielding samples on the refined offset lattice.
fn upsampled_inverse(filtered: &[Complex64], axis: &Axis1d, up: &Axis1d) -> Vec<Complex64> {
    let mut padded = vec![Complex64::default(); up.n];
    let offset = up.n / 2 - axis.n / 2;
    padded[offset..offset + axis.n].copy_from_slice(filtered);
    dft1_inverse_rows(&padded, 1, up)
}

/// Read `h` (on the upsampled lattice) at `x`, linear between samples.
fn read_profile(h: &[Complex64], up: &Axis1d, x: f64) -> Complex64 {
    linear_lattice(h, (x - up.x0) / up.dx)
}

/// One polar backprojection plane: `Σ_θ Δθ · I_θ(w(θ)·b)` where `I_θ` is
/// the correlation of the data row at `θ` with the window row at
/// `θ - φ` (chart-reduced), dilated by `a`. The χ and representation
/// normalizations are NOT included here.
fn polar_plane(
    data: &RowSpectra,
    window: &RowSpectra,
    n_theta: usize,
    phi: f64,
    a: f64,
    b_grid: &crate::signal::Grid2,
) -> Vec<Complex64> {
    let axis = data.axis;
    let up = upsampled_axis(&axis);
    let dtheta = PI / n_theta as f64;
    let mut plane = vec![Complex64::default(); b_grid.len()];
    let mut filtered = vec![Complex64::default(); axis.n];
    for i_theta in 0..n_theta {
        let theta = i_theta as f64 * dtheta;
        // window row index for θ - φ with the (θ+π, t) ≡ (θ, -t) chart
        let raw = theta - phi;
        let wraps = (raw / PI).floor() as i64;
        let theta_src = reduce_mod(raw, PI);
        let sign = if wraps.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let u = theta_src / dtheta;
        let i0 = (u.floor() as usize).min(n_theta - 1);
        let frac = u - i0 as f64;
        for k in 0..axis.n {
            let tau = axis.freq(k);
            let f = sign * a * tau;
            let w0 = window.sample(i0, f);
            let w1 = if frac == 0.0 {
                Complex64::default()
            } else if i0 + 1 < n_theta {
                window.sample(i0 + 1, f)
            } else {
                window.sample(0, -f) // θ = π row is the flipped row 0
            };
            let wmix = w0 * (1.0 - frac) + w1 * frac;
            filtered[k] = data.row(i_theta)[k] * (wmix * a).conj();
        }
        let h = upsampled_inverse(&filtered, &axis, &up);
        let (c, s) = (theta.cos(), theta.sin());
        for i1 in 0..b_grid.n1 {
            let bx = b_grid.origin.x + i1 as f64 * b_grid.dx;
            let partial = c * bx;
            let row = &mut plane[i1 * b_grid.n2..(i1 + 1) * b_grid.n2];
            for (i2, slot) in row.iter_mut().enumerate() {
                let by = b_grid.origin.y + i2 as f64 * b_grid.dy;
                *slot += read_profile(&h, &up, partial + s * by);
            }
        }
    }
    for z in &mut plane {
        *z *= dtheta;
    }
    plane
}

/// Streaming polar analysis: calls `sink(j_scale, i_angle, plane)` for
/// every cell of the group grid in a fixed order; planes within a chunk
/// are computed in parallel.
pub fn for_each_plane_polar(
    sino: &PolarSinogram,
    window: &PolarSinogram,
    grid: &GroupGrid,
    mut sink: impl FnMut(usize, usize, Vec<Complex64>),
) -> Result<()> {
    if grid.kind != GroupKind::Sim2 {
        return Err(Error::FamilyMismatch("polar analysis needs a SIM(2) grid".into()));
    }
    sino.check_same_shape(window)?;
    let data = RowSpectra::new(&sino.samples, sino.n_theta, sino.t_axis);
    let win = RowSpectra::new(&window.samples, window.n_theta, window.t_axis);
    let chunk = 32;
    let n_planes = grid.n_planes();
    for start in (0..n_planes).step_by(chunk) {
        let end = (start + chunk).min(n_planes);
        let planes: Vec<(usize, Vec<Complex64>)> = (start..end)
            .into_par_iter()
            .map(|p| {
                let (j, i) = (p / grid.n_angles(), p % grid.n_angles());
                let a = grid.scales[j];
                let mut plane =
                    polar_plane(&data, &win, sino.n_theta, grid.angles[i], a, &grid.b_grid);
                // χ(g) a^{-1/2} = a^{-1}
                let norm = 1.0 / a;
                for z in &mut plane {
                    *z *= norm;
                }
                (p, plane)
            })
            .collect();
        for (p, plane) in planes {
            sink(p / grid.n_angles(), p % grid.n_angles(), plane);
        }
    }
    Ok(())
}

/// Polar analysis collecting the full coefficient field
/// `C(b, φ, a) = χ(g) ⟨R f, π̂(g) Ψ⟩`.
pub fn sinogram_analyze_polar(
    sino: &PolarSinogram,
    window: &PolarSinogram,
    grid: &GroupGrid,
) -> Result<CoefficientField> {
    let mut field = CoefficientField::zeros(grid.clone());
    for_each_plane_polar(sino, window, grid, |j, i, plane| {
        let idx = j * grid.n_angles() + i;
        field.planes[idx] = plane;
    })?;
    Ok(field)
}

/// Low-pass coefficients `⟨R f, π̂(b, 0, 1) W⟩` on the lattice, where `W`
/// is the ramp-filtered sinogram of the low-pass window (`I² R Φ`).
pub fn lowpass_coefficients_polar(
    sino: &PolarSinogram,
    window: &PolarSinogram,
    b_grid: &crate::signal::Grid2,
) -> Result<Vec<Complex64>> {
    sino.check_same_shape(window)?;
    let data = RowSpectra::new(&sino.samples, sino.n_theta, sino.t_axis);
    let win = RowSpectra::new(&window.samples, window.n_theta, window.t_axis);
    Ok(polar_plane(&data, &win, sino.n_theta, 0.0, 1.0, b_grid))
}

fn affine_plane(
    data: &RowSpectra,
    window: &RowSpectra,
    v_axis: &Axis1d,
    s: f64,
    a: f64,
    b_grid: &crate::signal::Grid2,
) -> Vec<Complex64> {
    let axis = data.axis;
    let up = upsampled_axis(&axis);
    let mut plane = vec![Complex64::default(); b_grid.len()];
    let mut filtered = vec![Complex64::default(); axis.n];
    let root_a = a.abs().sqrt();
    for i_v in 0..v_axis.n {
        let v = v_axis.coord(i_v);
        let v_src = (v - s) / root_a;
        let u = (v_src - v_axis.x0) / v_axis.dx;
        if !(0.0..=(v_axis.n - 1) as f64).contains(&u) {
            continue; // window vanishes outside its shear chart
        }
        let i0 = (u.floor() as usize).min(v_axis.n - 2);
        let frac = u - i0 as f64;
        for k in 0..axis.n {
            let tau = axis.freq(k);
            let f = a * tau; // signed scale flips the offset axis
            let wmix = window.sample(i0, f) * (1.0 - frac) + window.sample(i0 + 1, f) * frac;
            filtered[k] = data.row(i_v)[k] * (wmix * a.abs()).conj();
        }
        let h = upsampled_inverse(&filtered, &axis, &up);
        for i1 in 0..b_grid.n1 {
            let bx = b_grid.origin.x + i1 as f64 * b_grid.dx;
            let row = &mut plane[i1 * b_grid.n2..(i1 + 1) * b_grid.n2];
            for (i2, slot) in row.iter_mut().enumerate() {
                let by = b_grid.origin.y + i2 as f64 * b_grid.dy;
                *slot += read_profile(&h, &up, bx + v * by);
            }
        }
    }
    for z in &mut plane {
        *z *= v_axis.dx;
    }
    plane
}

pub fn for_each_plane_affine(
    sino: &AffineSinogram,
    window: &AffineSinogram,
    grid: &GroupGrid,
    mut sink: impl FnMut(usize, usize, Vec<Complex64>),
) -> Result<()> {
    if grid.kind != GroupKind::Shearlet {
        return Err(Error::FamilyMismatch("affine analysis needs a shearlet grid".into()));
    }
    sino.check_same_shape(window)?;
    let data = RowSpectra::new(&sino.samples, sino.v_axis.n, sino.t_axis);
    let win = RowSpectra::new(&window.samples, window.v_axis.n, window.t_axis);
    let chunk = 32;
    let n_planes = grid.n_planes();
    for start in (0..n_planes).step_by(chunk) {
        let end = (start + chunk).min(n_planes);
        let planes: Vec<(usize, Vec<Complex64>)> = (start..end)
            .into_par_iter()
            .map(|p| {
                let (j, i) = (p / grid.n_angles(), p % grid.n_angles());
                let a = grid.scales[j];
                let mut plane =
                    affine_plane(&data, &win, &sino.v_axis, grid.angles[i], a, &grid.b_grid);
                // χ(g) |a|^{-3/4} = |a|^{-5/4}
                let norm = a.abs().powf(-1.25);
                for z in &mut plane {
                    *z *= norm;
                }
                (p, plane)
            })
            .collect();
        for (p, plane) in planes {
            sink(p / grid.n_angles(), p % grid.n_angles(), plane);
        }
    }
    Ok(())
}

pub fn sinogram_analyze_affine(
    sino: &AffineSinogram,
    window: &AffineSinogram,
    grid: &GroupGrid,
) -> Result<CoefficientField> {
    let mut field = CoefficientField::zeros(grid.clone());
    for_each_plane_affine(sino, window, grid, |j, i, plane| {
        let idx = j * grid.n_angles() + i;
        field.planes[idx] = plane;
    })?;
    Ok(field)
}

struct SliceSpectra {
    radii: Vec<f64>,
    spectra: Vec<Spectrum>,
}

impl SliceSpectra {
    fn new(sino: &CircularSinogram) -> Self {
        let spectra = (0..sino.nr())
            .map(|ir| {
                dft2_unitary(&crate::signal::Image {
                    grid: sino.cgrid,
                    samples: sino.r_slice(ir),
                })
            })
            .collect();
        SliceSpectra { radii: sino.radii.clone(), spectra }
    }

    /// Window spectrum at `(τ', r')`: bilinear in the frequency plane,
    /// linear in log radius, zero outside the stored ranges.
    fn sample(&self, tau: Vec2, r: f64) -> Complex64 {
        let n = self.radii.len();
        if r < self.radii[0] || r > self.radii[n - 1] {
            return Complex64::default();
        }
        let k = match self.radii.binary_search_by(|x| x.partial_cmp(&r).unwrap()) {
            Ok(k) => k.min(n - 2),
            Err(k) => k.saturating_sub(1).min(n - 2),
        };
        let w = ((r / self.radii[k]).ln() / (self.radii[k + 1] / self.radii[k]).ln()).clamp(0.0, 1.0);
        let lo = self.spectra[k].sample_bilinear(tau);
        let hi = self.spectra[k + 1].sample_bilinear(tau);
        lo * (1.0 - w) + hi * w
    }
}

pub fn for_each_plane_circular(
    sino: &CircularSinogram,
    window: &CircularSinogram,
    grid: &GroupGrid,
    mut sink: impl FnMut(usize, usize, Vec<Complex64>),
) -> Result<()> {
    if grid.kind != GroupKind::Sim2 {
        return Err(Error::FamilyMismatch("circular analysis needs a SIM(2) grid".into()));
    }
    if grid.b_grid != sino.cgrid || window.cgrid != sino.cgrid {
        return Err(Error::ShapeMismatch(
            "circular analysis needs sinogram, window and lattice on the same center grid".into(),
        ));
    }
    if (window.alpha - sino.alpha).abs() > 1e-12 {
        return Err(Error::FamilyMismatch("window and sinogram alpha differ".into()));
    }
    let alpha = sino.alpha;
    let data = SliceSpectra::new(sino);
    let win = SliceSpectra::new(window);
    let wr = sino.r_weights();
    let cgrid = sino.cgrid;
    let ax1 = Axis1d { n: cgrid.n1, x0: cgrid.origin.x, dx: cgrid.dx };
    let ax2 = Axis1d { n: cgrid.n2, x0: cgrid.origin.y, dx: cgrid.dy };

    let chunk = 16;
    let n_planes = grid.n_planes();
    for start in (0..n_planes).step_by(chunk) {
        let end = (start + chunk).min(n_planes);
        let planes: Vec<(usize, Vec<Complex64>)> = (start..end)
            .into_par_iter()
            .map(|p| {
                let (j, i) = (p / grid.n_angles(), p % grid.n_angles());
                let a = grid.scales[j];
                let phi = grid.angles[i];
                let rot = crate::linalg::Mat2::rotation(-phi);
                let mut acc = vec![Complex64::default(); cgrid.len()];
                for (ir, &r) in data.radii.iter().enumerate() {
                    let r_src = r / a;
                    let weight = wr[ir] * r.powf(-alpha);
                    let spec_r = &data.spectra[ir];
                    for k1 in 0..cgrid.n1 {
                        for k2 in 0..cgrid.n2 {
                            let tau = Vec2::new(ax1.freq(k1), ax2.freq(k2));
                            let tau_src = rot.apply(tau) * a;
                            let wv = win.sample(tau_src, r_src);
                            acc[k1 * cgrid.n2 + k2] +=
                                spec_r.at(k1, k2) * wv.conj() * weight;
                        }
                    }
                }
                let spec = Spectrum { grid: cgrid, samples: acc };
                let mut plane = crate::signal::dft2_inverse(&spec).samples;
                let norm = a.powf(alpha);
                for z in &mut plane {
                    *z *= norm;
                }
                (p, plane)
            })
            .collect();
        for (p, plane) in planes {
            sink(p / grid.n_angles(), p % grid.n_angles(), plane);
        }
    }
    Ok(())
}

pub fn sinogram_analyze_circular(
    sino: &CircularSinogram,
    window: &CircularSinogram,
    grid: &GroupGrid,
) -> Result<CoefficientField> {
    let mut field = CoefficientField::zeros(grid.clone());
    for_each_plane_circular(sino, window, grid, |j, i, plane| {
        let idx = j * grid.n_angles() + i;
        field.planes[idx] = plane;
    })?;
    Ok(field)
}

/// Reference evaluation of a single polar coefficient by direct quadrature
/// of `χ(g) ⟨R f, π̂(g)Ψ⟩` over the sinogram grid, with the window read by
/// chart-aware interpolation. Slow; used as an oracle for the fast path.
pub fn polar_coefficient_direct(
    sino: &PolarSinogram,
    window: &PolarSinogram,
    g: &crate::group::Sim2Element,
) -> Complex64 {
    let mut acc = Complex64::default();
    let rep_scale = g.a.powf(-0.5);
    for i in 0..sino.n_theta {
        let theta = sino.theta(i);
        let shift = Vec2::unit(theta).dot(g.b);
        for (k, t) in sino.t_axis.coords().enumerate() {
            let w = sample_polar(window, theta - g.phi, (t - shift) / g.a) * rep_scale;
            acc += sino.samples[i * sino.t_axis.n + k] * w.conj();
        }
    }
    let chi = g.a.powf(-0.5);
    acc * sino.dtheta() * sino.t_axis.dx * chi
}

/// Affine counterpart of [`polar_coefficient_direct`].
pub fn affine_coefficient_direct(
    sino: &AffineSinogram,
    window: &AffineSinogram,
    g: &crate::group::ShearletElement,
) -> Complex64 {
    let mut acc = Complex64::default();
    let rep_scale = g.a.abs().powf(-0.75);
    let root_a = g.a.abs().sqrt();
    for (i, v) in sino.v_axis.coords().enumerate() {
        let v_src = (v - g.s) / root_a;
        let shift = Vec2::new(1.0, v).dot(g.b);
        for (k, t) in sino.t_axis.coords().enumerate() {
            let w = sample_affine(window, v_src, (t - shift) / g.a) * rep_scale;
            acc += sino.samples[i * sino.t_axis.n + k] * w.conj();
        }
    }
    let chi = g.a.abs().powf(-0.5);
    acc * sino.v_axis.dx * sino.t_axis.dx * chi
}

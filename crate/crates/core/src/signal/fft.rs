//! Unitary discrete Fourier transforms with physical axis scaling.
//!
//! The forward transform approximates `F(ξ) = ∫ f(x) e^{-2πi x·ξ} dx` by the
//! Riemann sum over the sample grid, so spacings are absorbed into the
//! result. Frequencies are the conjugate lattice `ξ_k = (k - ⌊n/2⌋)/(n·dx)`.
//! With norms weighted by the respective cell measures the transform is
//! unitary, and the inverse reproduces the samples to machine precision.

use super::grid::{Grid2, Image};
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::sync::Arc;

/// A uniform 1D sampling axis `x_j = x0 + j·dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis1d {
    pub n: usize,
    pub x0: f64,
    pub dx: f64,
}

impl Axis1d {
    /// Centered axis with symmetric coordinates.
    pub fn centered(n: usize, dx: f64) -> Self {
        Axis1d { n, x0: -((n - 1) as f64) / 2.0 * dx, dx }
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.dx
    }

    pub fn coords(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.coord(i))
    }

    /// Conjugate frequency spacing `1/(n·dx)`.
    pub fn freq_step(&self) -> f64 {
        1.0 / (self.n as f64 * self.dx)
    }

    pub fn freq_origin(&self) -> f64 {
        -((self.n / 2) as f64) * self.freq_step()
    }

    /// Frequency of bin `k`.
    pub fn freq(&self, k: usize) -> f64 {
        self.freq_origin() + k as f64 * self.freq_step()
    }

    pub fn nyquist(&self) -> f64 {
        0.5 / self.dx
    }

    /// Extent covered by the samples, `n·dx`.
    pub fn span(&self) -> f64 {
        self.n as f64 * self.dx
    }
}

fn cis(phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, phase)
}

/// Phase/scale factors turning a raw FFT into the physical transform.
struct AxisTwiddles {
    /// Applied to samples before the raw FFT (bin-centering shift).
    pre: Vec<Complex64>,
    /// Applied to bins after the raw FFT (origin phase and measure).
    post: Vec<Complex64>,
}

impl AxisTwiddles {
    fn forward(axis: &Axis1d) -> Self {
        let n = axis.n;
        let h = (n / 2) as f64;
        let pre = (0..n)
            .map(|j| cis(std::f64::consts::TAU * j as f64 * h / n as f64))
            .collect();
        let post = (0..n)
            .map(|k| cis(-std::f64::consts::TAU * axis.x0 * axis.freq(k)) * axis.dx)
            .collect();
        AxisTwiddles { pre, post }
    }

    fn inverse(axis: &Axis1d) -> Self {
        let n = axis.n;
        let h = (n / 2) as f64;
        let dxi = axis.freq_step();
        // pre acts on bins, post on samples
        let pre = (0..n)
            .map(|k| cis(std::f64::consts::TAU * axis.x0 * axis.freq(k)))
            .collect();
        let post = (0..n)
            .map(|j| cis(-std::f64::consts::TAU * j as f64 * h / n as f64) * dxi)
            .collect();
        AxisTwiddles { pre, post }
    }
}

fn transform_rows(
    data: &[Complex64],
    nrows: usize,
    axis: &Axis1d,
    direction: FftDirection,
) -> Vec<Complex64> {
    assert_eq!(data.len(), nrows * axis.n, "row buffer does not match axis");
    let tw = match direction {
        FftDirection::Forward => AxisTwiddles::forward(axis),
        FftDirection::Inverse => AxisTwiddles::inverse(axis),
    };
    let mut planner = FftPlanner::new();
    let fft: Arc<dyn Fft<f64>> = planner.plan_fft(axis.n, direction);

    let mut out = data.to_vec();
    let process = |row: &mut [Complex64], scratch: &mut Vec<Complex64>| {
        for (v, p) in row.iter_mut().zip(&tw.pre) {
            *v *= p;
        }
        fft.process_with_scratch(row, scratch);
        for (v, p) in row.iter_mut().zip(&tw.post) {
            *v *= p;
        }
    };
    if nrows * axis.n >= 1 << 15 && nrows > 1 {
        out.par_chunks_mut(axis.n).for_each_init(
            || vec![Complex64::default(); fft.get_inplace_scratch_len()],
            |scratch, row| process(row, scratch),
        );
    } else {
        let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
        for row in out.chunks_mut(axis.n) {
            process(row, &mut scratch);
        }
    }
    out
}

/// Unitary 1D transform applied to each contiguous row of a 2D array.
pub fn dft1_rows(data: &[Complex64], nrows: usize, axis: &Axis1d) -> Vec<Complex64> {
    transform_rows(data, nrows, axis, FftDirection::Forward)
}

pub fn dft1_inverse_rows(data: &[Complex64], nrows: usize, axis: &Axis1d) -> Vec<Complex64> {
    transform_rows(data, nrows, axis, FftDirection::Inverse)
}

/// The 2D spectrum of an [`Image`], sampled on the conjugate lattice.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// The spatial grid the spectrum was computed from.
    pub grid: Grid2,
    /// Row-major bins, axis-1 major like the image samples.
    pub samples: Vec<Complex64>,
}

impl Spectrum {
    pub fn axis1(&self) -> Axis1d {
        Axis1d { n: self.grid.n1, x0: self.grid.origin.x, dx: self.grid.dx }
    }

    pub fn axis2(&self) -> Axis1d {
        Axis1d { n: self.grid.n2, x0: self.grid.origin.y, dx: self.grid.dy }
    }

    pub fn freq(&self, k1: usize, k2: usize) -> crate::linalg::Vec2 {
        crate::linalg::Vec2::new(self.axis1().freq(k1), self.axis2().freq(k2))
    }

    pub fn at(&self, k1: usize, k2: usize) -> Complex64 {
        self.samples[k1 * self.grid.n2 + k2]
    }

    /// `L²(dξ)` norm with the frequency cell measure attached; by unitarity
    /// it equals the image `L²(dx)` norm.
    pub fn l2_norm(&self) -> f64 {
        let cell = self.axis1().freq_step() * self.axis2().freq_step();
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    /// Bilinear interpolation of the spectrum at an arbitrary frequency,
    /// zero outside the sampled band.
    pub fn sample_bilinear(&self, xi: crate::linalg::Vec2) -> Complex64 {
        let a1 = self.axis1();
        let a2 = self.axis2();
        let u = (xi.x - a1.freq_origin()) / a1.freq_step();
        let v = (xi.y - a2.freq_origin()) / a2.freq_step();
        super::interp::bilinear_lattice(&self.samples, self.grid.n1, self.grid.n2, u, v)
    }
}

fn transform_axis1(data: &mut Vec<Complex64>, n1: usize, n2: usize, axis: &Axis1d, dir: FftDirection) {
    // Work on transposed copy so rows are contiguous.
    let mut t = vec![Complex64::default(); data.len()];
    for i1 in 0..n1 {
        for i2 in 0..n2 {
            t[i2 * n1 + i1] = data[i1 * n2 + i2];
        }
    }
    let t = transform_rows(&t, n2, axis, dir);
    for i1 in 0..n1 {
        for i2 in 0..n2 {
            data[i1 * n2 + i2] = t[i2 * n1 + i1];
        }
    }
}

/// Unitary 2D transform of an image.
pub fn dft2_unitary(img: &Image) -> Spectrum {
    let g = img.grid;
    let ax1 = Axis1d { n: g.n1, x0: g.origin.x, dx: g.dx };
    let ax2 = Axis1d { n: g.n2, x0: g.origin.y, dx: g.dy };
    let mut samples = transform_rows(&img.samples, g.n1, &ax2, FftDirection::Forward);
    transform_axis1(&mut samples, g.n1, g.n2, &ax1, FftDirection::Forward);
    Spectrum { grid: g, samples }
}

/// Inverse of [`dft2_unitary`]; reproduces the image samples to 1e-12.
pub fn dft2_inverse(spec: &Spectrum) -> Image {
    let g = spec.grid;
    let ax1 = Axis1d { n: g.n1, x0: g.origin.x, dx: g.dx };
    let ax2 = Axis1d { n: g.n2, x0: g.origin.y, dx: g.dy };
    let mut samples = transform_rows(&spec.samples, g.n1, &ax2, FftDirection::Inverse);
    transform_axis1(&mut samples, g.n1, g.n2, &ax1, FftDirection::Inverse);
    Image { grid: g, samples }
}

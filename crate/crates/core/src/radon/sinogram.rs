//! Sinogram containers for the three parametrizations.

use crate::error::{Error, Result};
use crate::signal::{Axis1d, Grid2};
use num_complex::Complex64;

/// Samples of a function on `[0, π) × R`: `θ`-major rows over a uniform
/// centered `t` axis. The angles are `θ_i = i·π/n_theta` (π excluded).
#[derive(Debug, Clone)]
pub struct PolarSinogram {
    pub n_theta: usize,
    pub t_axis: Axis1d,
    pub samples: Vec<Complex64>,
}

impl PolarSinogram {
    pub fn zeros(n_theta: usize, t_axis: Axis1d) -> Self {
        PolarSinogram { n_theta, t_axis, samples: vec![Complex64::default(); n_theta * t_axis.n] }
    }

    pub fn dtheta(&self) -> f64 {
        std::f64::consts::PI / self.n_theta as f64
    }

    pub fn theta(&self, i: usize) -> f64 {
        i as f64 * self.dtheta()
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.samples[i * self.t_axis.n..(i + 1) * self.t_axis.n]
    }

    /// A `t` axis wide enough that every line meeting the grid's support is
    /// represented: extent √2 × the larger half-width.
    pub fn default_t_axis(grid: &Grid2, nt: usize) -> Axis1d {
        let half = grid.half_width_x().max(grid.half_width_y()) * std::f64::consts::SQRT_2;
        Axis1d::centered(nt, 2.0 * half / nt as f64)
    }

    /// `L²(dθ dt)` norm.
    pub fn l2_norm(&self) -> f64 {
        let cell = self.dtheta() * self.t_axis.dx;
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n_theta != other.n_theta || self.t_axis != other.t_axis {
            return Err(Error::ShapeMismatch("polar sinogram shapes differ".into()));
        }
        Ok(())
    }
}

/// Samples of a function on `R_v × R_t`: `v`-major rows over a uniform
/// centered `t` axis. The `v` axis is uniform on `[-V, V]`; vertical lines
/// are unreachable in this chart.
#[derive(Debug, Clone)]
pub struct AffineSinogram {
    pub v_axis: Axis1d,
    pub t_axis: Axis1d,
    pub samples: Vec<Complex64>,
}

impl AffineSinogram {
    pub fn zeros(v_axis: Axis1d, t_axis: Axis1d) -> Self {
        AffineSinogram { v_axis, t_axis, samples: vec![Complex64::default(); v_axis.n * t_axis.n] }
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.samples[i * self.t_axis.n..(i + 1) * self.t_axis.n]
    }

    /// Uniform slope axis on `[-v_max, v_max]`.
    pub fn default_v_axis(v_max: f64, nv: usize) -> Axis1d {
        Axis1d::centered(nv, 2.0 * v_max / nv as f64)
    }

    /// A `t` axis covering intercepts of all represented lines that meet
    /// the grid: extent `(1 + v_max) ×` half-width.
    pub fn default_t_axis(grid: &Grid2, v_max: f64, nt: usize) -> Axis1d {
        let half = grid.half_width_x() + v_max * grid.half_width_y();
        Axis1d::centered(nt, 2.0 * 1.05 * half / nt as f64)
    }

    /// `L²(dv dt)` norm.
    pub fn l2_norm(&self) -> f64 {
        let cell = self.v_axis.dx * self.t_axis.dx;
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.v_axis != other.v_axis || self.t_axis != other.t_axis {
            return Err(Error::ShapeMismatch("affine sinogram shapes differ".into()));
        }
        Ok(())
    }
}

/// Samples of a function on `R²_c × R⁺_r` with the measure `dc dr / r^α`:
/// center-major storage, radius fastest. Radii are strictly increasing,
/// geometric by default so the `dr/r^α` measure is resolved.
#[derive(Debug, Clone)]
pub struct CircularSinogram {
    pub cgrid: Grid2,
    pub radii: Vec<f64>,
    pub alpha: f64,
    pub samples: Vec<Complex64>,
}

/// Geometrically spaced radii in `[r_min, r_max]`.
pub fn geometric_radii(r_min: f64, r_max: f64, n: usize) -> Vec<f64> {
    assert!(r_min > 0.0 && r_max > r_min && n >= 2);
    let ratio = (r_max / r_min).powf(1.0 / (n - 1) as f64);
    (0..n).map(|k| r_min * ratio.powi(k as i32)).collect()
}

impl CircularSinogram {
    pub fn zeros(cgrid: Grid2, radii: Vec<f64>, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::domain(format!("circular sinogram needs alpha in (0,1); got {alpha}")));
        }
        if radii.is_empty() || radii[0] <= 0.0 || radii.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::invalid("radii must be positive and strictly increasing"));
        }
        let n = cgrid.len() * radii.len();
        Ok(CircularSinogram { cgrid, radii, alpha, samples: vec![Complex64::default(); n] })
    }

    pub fn nr(&self) -> usize {
        self.radii.len()
    }

    pub fn at(&self, i1: usize, i2: usize, ir: usize) -> Complex64 {
        self.samples[(i1 * self.cgrid.n2 + i2) * self.nr() + ir]
    }

    /// Extract the center-plane slice at radius index `ir`.
    pub fn r_slice(&self, ir: usize) -> Vec<Complex64> {
        let nr = self.nr();
        self.samples.iter().skip(ir).step_by(nr).copied().collect()
    }

    pub fn set_r_slice(&mut self, ir: usize, slice: &[Complex64]) {
        let nr = self.nr();
        for (k, z) in slice.iter().enumerate() {
            self.samples[k * nr + ir] = *z;
        }
    }

    /// Trapezoid quadrature weights for `∫ · dr` on the stored radii.
    pub fn r_weights(&self) -> Vec<f64> {
        let r = &self.radii;
        let n = r.len();
        (0..n)
            .map(|k| {
                if k == 0 {
                    (r[1] - r[0]) / 2.0
                } else if k == n - 1 {
                    (r[n - 1] - r[n - 2]) / 2.0
                } else {
                    (r[k + 1] - r[k - 1]) / 2.0
                }
            })
            .collect()
    }

    /// `L²(dc · r^{-α} dr)` norm with the trapezoid radius weights; an
    /// explicit `alpha` override supports the square-integrability gate,
    /// which probes exponents outside `(0, 1)`.
    pub fn l2_norm_weighted(&self, alpha: f64) -> f64 {
        let wr = self.r_weights();
        let mut total = 0.0;
        for (ir, (&r, &w)) in self.radii.iter().zip(&wr).enumerate() {
            let slice_energy: f64 = self
                .samples
                .iter()
                .skip(ir)
                .step_by(self.nr())
                .map(|z| z.norm_sqr())
                .sum();
            total += slice_energy * r.powf(-alpha) * w;
        }
        (total * self.cgrid.cell_area()).sqrt()
    }

    pub fn l2_norm(&self) -> f64 {
        self.l2_norm_weighted(self.alpha)
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.cgrid != other.cgrid || self.radii != other.radii {
            return Err(Error::ShapeMismatch("circular sinogram shapes differ".into()));
        }
        Ok(())
    }
}

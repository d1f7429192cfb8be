//! Fourier slice oracles.
//!
//! Each check compares a partial Fourier transform of a computed sinogram
//! against samples of the image's own 2D spectrum. The image is zero-padded
//! before the 2D transform so the spectrum is sampled densely enough for
//! bilinear interpolation along the rays. Errors are reported relative to
//! the peak spectral magnitude inside the compared band.

use super::sinogram::{AffineSinogram, CircularSinogram, PolarSinogram};
use crate::error::{Error, Result};
use crate::linalg::Vec2;
use crate::signal::{bessel_j0, dft1_rows, dft2_unitary, Grid2, Image, Spectrum};

/// Zero-pad an image by an integer factor, keeping the original samples on
/// the same physical lattice points.
pub(crate) fn pad_image(img: &Image, pad: usize) -> Image {
    assert!(pad >= 1);
    if pad == 1 {
        return img.clone();
    }
    let g = img.grid;
    let (n1, n2) = (g.n1 * pad, g.n2 * pad);
    let (off1, off2) = ((n1 - g.n1) / 2, (n2 - g.n2) / 2);
    let origin = Vec2::new(
        g.origin.x - off1 as f64 * g.dx,
        g.origin.y - off2 as f64 * g.dy,
    );
    let grid = Grid2 { n1, n2, origin, dx: g.dx, dy: g.dy };
    let mut out = Image::zeros(grid);
    for i1 in 0..g.n1 {
        for i2 in 0..g.n2 {
            *out.at_mut(i1 + off1, i2 + off2) = img.at(i1, i2);
        }
    }
    out
}

struct SupTracker {
    max_err: f64,
    max_ref: f64,
}

impl SupTracker {
    fn new() -> Self {
        SupTracker { max_err: 0.0, max_ref: 0.0 }
    }

    fn push(&mut self, lhs: num_complex::Complex64, rhs: num_complex::Complex64) {
        self.max_err = self.max_err.max((lhs - rhs).norm());
        self.max_ref = self.max_ref.max(rhs.norm());
    }

    fn rel(&self) -> f64 {
        if self.max_ref == 0.0 {
            if self.max_err == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.max_err / self.max_ref
        }
    }
}

/// Max error of `(I ⊗ F) R^pol f(θ, τ) = F f(τ·w(θ))` over the band
/// `|τ| ≤ 0.8 ×` the smaller Nyquist frequency, relative to the peak
/// in-band spectral magnitude.
pub fn slice_check_polar(img: &Image, sino: &PolarSinogram, pad: usize) -> f64 {
    let spec = dft2_unitary(&pad_image(img, pad));
    let rows = dft1_rows(&sino.samples, sino.n_theta, &sino.t_axis);
    let band = 0.8
        * sino
            .t_axis
            .nyquist()
            .min(0.5 / img.grid.dx)
            .min(0.5 / img.grid.dy);
    let mut sup = SupTracker::new();
    for i in 0..sino.n_theta {
        let omega = Vec2::unit(sino.theta(i));
        for k in 0..sino.t_axis.n {
            let tau = sino.t_axis.freq(k);
            if tau.abs() > band {
                continue;
            }
            let lhs = rows[i * sino.t_axis.n + k];
            let rhs = spec.sample_bilinear(omega * tau);
            sup.push(lhs, rhs);
        }
    }
    sup.rel()
}

/// Max error of the derived affine slice identity
/// `(I ⊗ F) R^aff f(v, τ) = F f(τ·n(v))`, over frequencies whose ray point
/// `τ·(1, v)` stays inside 80% of the image band componentwise.
pub fn slice_check_affine(img: &Image, sino: &AffineSinogram, pad: usize) -> f64 {
    let spec = dft2_unitary(&pad_image(img, pad));
    let rows = dft1_rows(&sino.samples, sino.v_axis.n, &sino.t_axis);
    let band_t = 0.8 * sino.t_axis.nyquist();
    let band1 = 0.8 * 0.5 / img.grid.dx;
    let band2 = 0.8 * 0.5 / img.grid.dy;
    let mut sup = SupTracker::new();
    for i in 0..sino.v_axis.n {
        let v = sino.v_axis.coord(i);
        for k in 0..sino.t_axis.n {
            let tau = sino.t_axis.freq(k);
            if tau.abs() > band_t || tau.abs() > band1 || (tau * v).abs() > band2 {
                continue;
            }
            let lhs = rows[i * sino.t_axis.n + k];
            let rhs = spec.sample_bilinear(Vec2::new(tau, tau * v));
            sup.push(lhs, rhs);
        }
    }
    sup.rel()
}

/// Max error of `(F ⊗ I) R^cir f(τ, r) = 2π J_0(2π|τ|r) F f(τ)` over 80% of
/// the center-grid band. Requires the sinogram centers to live on the image
/// grid so both spectra share their frequency lattice.
pub fn slice_check_circular(img: &Image, sino: &CircularSinogram) -> Result<f64> {
    if sino.cgrid != img.grid {
        return Err(Error::ShapeMismatch(
            "circular slice check needs the center grid to equal the image grid".into(),
        ));
    }
    let spec = dft2_unitary(img);
    let band1 = 0.8 * spec.axis1().nyquist();
    let band2 = 0.8 * spec.axis2().nyquist();
    let mut sup = SupTracker::new();
    for (ir, &r) in sino.radii.iter().enumerate() {
        let slice = Image { grid: sino.cgrid, samples: sino.r_slice(ir) };
        let slice_spec: Spectrum = dft2_unitary(&slice);
        for k1 in 0..sino.cgrid.n1 {
            for k2 in 0..sino.cgrid.n2 {
                let xi = spec.freq(k1, k2);
                if xi.x.abs() > band1 || xi.y.abs() > band2 {
                    continue;
                }
                let lhs = slice_spec.at(k1, k2);
                let rhs = spec.at(k1, k2)
                    * (std::f64::consts::TAU * bessel_j0(std::f64::consts::TAU * xi.norm() * r));
                sup.push(lhs, rhs);
            }
        }
    }
    Ok(sup.rel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phantom;
    use crate::radon::{geometric_radii, radon_affine, radon_circular, radon_polar};
    use crate::signal::Axis1d;

    #[test]
    fn polar_slice_gaussian_tight() {
        let g = Grid2::square(128, 1.0 / 16.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let t_axis = PolarSinogram::default_t_axis(&g, 256);
        let sino = radon_polar(&img, 60, t_axis, g.dx / 2.0);
        let err = slice_check_polar(&img, &sino, 8);
        assert!(err <= 1e-3, "polar slice error {err}");
    }

    #[test]
    fn polar_slice_band_limited_random() {
        let g = Grid2::square(96, 1.0 / 12.0).unwrap();
        let img = phantom::band_limited_random(g, 0.4, 5);
        let t_axis = PolarSinogram::default_t_axis(&g, 192);
        let sino = radon_polar(&img, 48, t_axis, g.dx / 2.0);
        let err = slice_check_polar(&img, &sino, 8);
        assert!(err <= 1e-2, "polar slice error {err}");
    }

    #[test]
    fn zero_image_zero_error() {
        let g = Grid2::square(32, 0.25).unwrap();
        let img = Image::zeros(g);
        let t_axis = PolarSinogram::default_t_axis(&g, 32);
        let sino = radon_polar(&img, 12, t_axis, 0.1);
        assert_eq!(slice_check_polar(&img, &sino, 2), 0.0);
    }

    #[test]
    fn affine_slice_gaussian() {
        let g = Grid2::square(128, 1.0 / 16.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let v_axis = AffineSinogram::default_v_axis(2.0, 33);
        let t_axis = AffineSinogram::default_t_axis(&g, 2.0, 512);
        let sino = radon_affine(&img, v_axis, t_axis, g.dx / 2.0);
        let err = slice_check_affine(&img, &sino, 8);
        assert!(err <= 1e-3, "affine slice error {err}");
    }

    #[test]
    fn affine_slice_band_limited_random() {
        let g = Grid2::square(96, 1.0 / 12.0).unwrap();
        let img = phantom::band_limited_random(g, 0.35, 7);
        let v_axis = AffineSinogram::default_v_axis(2.0, 25);
        let t_axis = AffineSinogram::default_t_axis(&g, 2.0, 384);
        let sino = radon_affine(&img, v_axis, t_axis, g.dx / 2.0);
        let err = slice_check_affine(&img, &sino, 8);
        assert!(err <= 1e-2, "affine slice error {err}");
    }

    #[test]
    fn circular_slice_gaussian_and_small_r_limit() {
        let g = Grid2::square(96, 1.0 / 8.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let radii = geometric_radii(0.05, 2.0, 12);
        let sino = radon_circular(&img, g, radii, 0.5, 256).unwrap();
        let err = slice_check_circular(&img, &sino).unwrap();
        assert!(err <= 1e-2, "circular slice error {err}");

        // as r → 0 the slices approach 2π · F f
        let spec = dft2_unitary(&img);
        let small = Image { grid: g, samples: sino.r_slice(0) };
        let small_spec = dft2_unitary(&small);
        let mut max_err = 0.0f64;
        for k1 in 0..g.n1 {
            for k2 in 0..g.n2 {
                let xi = spec.freq(k1, k2);
                if xi.norm() > 1.5 {
                    continue;
                }
                let rhs = spec.at(k1, k2) * std::f64::consts::TAU;
                max_err = max_err.max((small_spec.at(k1, k2) - rhs).norm());
            }
        }
        assert!(max_err <= 2e-2 * std::f64::consts::TAU, "small-r limit error {max_err}");
    }

    #[test]
    fn circular_slice_requires_matching_grids() {
        let g = Grid2::square(32, 0.25).unwrap();
        let other = Grid2::square(16, 0.25).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let sino = radon_circular(&img, other, vec![0.5, 1.0], 0.5, 32).unwrap();
        assert!(slice_check_circular(&img, &sino).is_err());
    }

    #[test]
    fn slice_errors_shrink_under_step_halving() {
        let g = Grid2::square(96, 1.0 / 12.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let t_axis = PolarSinogram::default_t_axis(&g, 192);
        let errs: Vec<f64> = [8.0, 4.0, 2.0]
            .iter()
            .map(|mult| {
                let sino = radon_polar(&img, 48, t_axis, mult * g.dx);
                slice_check_polar(&img, &sino, 8)
            })
            .collect();
        assert!(
            errs[0] > errs[1] && errs[1] > errs[2],
            "step halving must decrease the slice error: {errs:?}"
        );
    }
}

//! Forward transforms: line and circle integrals swept over the sinogram
//! grids. Embarrassingly parallel over rows; assembly order is fixed.

use super::sinogram::{AffineSinogram, CircularSinogram, PolarSinogram};
use crate::error::Result;
use crate::linalg::Vec2;
use crate::signal::{circle_integral, line_integral_arclength, line_integral_graph, Axis1d, Grid2, Image};
use num_complex::Complex64;
use rayon::prelude::*;

/// Polar Radon transform: arclength integrals over `{x·w(θ) = t}` for
/// `θ_i = i·π/n_theta` and `t` on the given axis.
pub fn radon_polar(img: &Image, n_theta: usize, t_axis: Axis1d, step: f64) -> PolarSinogram {
    assert!(n_theta >= 1);
    let dtheta = std::f64::consts::PI / n_theta as f64;
    let rows: Vec<Vec<Complex64>> = (0..n_theta)
        .into_par_iter()
        .map(|i| {
            let omega = Vec2::unit(i as f64 * dtheta);
            t_axis
                .coords()
                .map(|t| line_integral_arclength(img, omega, t, step))
                .collect()
        })
        .collect();
    let mut sino = PolarSinogram::zeros(n_theta, t_axis);
    for (i, row) in rows.into_iter().enumerate() {
        sino.samples[i * t_axis.n..(i + 1) * t_axis.n].copy_from_slice(&row);
    }
    sino
}

/// Affine Radon transform: graph-parametrized integrals `∫ f(t - vy, y) dy`.
pub fn radon_affine(img: &Image, v_axis: Axis1d, t_axis: Axis1d, step: f64) -> AffineSinogram {
    let rows: Vec<Vec<Complex64>> = (0..v_axis.n)
        .into_par_iter()
        .map(|i| {
            let v = v_axis.coord(i);
            t_axis
                .coords()
                .map(|t| line_integral_graph(img, v, t, step))
                .collect()
        })
        .collect();
    let mut sino = AffineSinogram::zeros(v_axis, t_axis);
    for (i, row) in rows.into_iter().enumerate() {
        sino.samples[i * t_axis.n..(i + 1) * t_axis.n].copy_from_slice(&row);
    }
    sino
}

/// Spherical-means Radon transform: circle integrals for every center on
/// `cgrid` and every radius.
pub fn radon_circular(
    img: &Image,
    cgrid: Grid2,
    radii: Vec<f64>,
    alpha: f64,
    nphi: usize,
) -> Result<CircularSinogram> {
    let mut sino = CircularSinogram::zeros(cgrid, radii, alpha)?;
    let nr = sino.nr();
    let radii = sino.radii.clone();
    sino.samples = (0..cgrid.len() * nr)
        .into_par_iter()
        .map(|idx| {
            let (ic, ir) = (idx / nr, idx % nr);
            let c = cgrid.point(ic / cgrid.n2, ic % cgrid.n2);
            circle_integral(img, c, radii[ir], nphi)
        })
        .collect();
    Ok(sino)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phantom;
    use crate::radon::geometric_radii;
    use std::f64::consts::PI;

    #[test]
    fn polar_gaussian_rows_are_all_the_gaussian_profile() {
        let g = Grid2::square(256, 1.0 / 64.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let t_axis = PolarSinogram::default_t_axis(&g, 128);
        let sino = radon_polar(&img, 90, t_axis, g.dx / 2.0);
        let mut max_err = 0.0f64;
        for i in 0..sino.n_theta {
            for (j, t) in t_axis.coords().enumerate() {
                let expect = (-PI * t * t).exp();
                max_err = max_err.max((sino.row(i)[j].re - expect).abs());
            }
        }
        assert!(max_err <= 1e-4, "max abs error {max_err}");
    }

    #[test]
    fn zero_image_gives_zero_sinograms() {
        let g = Grid2::square(32, 0.25).unwrap();
        let img = Image::zeros(g);
        let t_axis = PolarSinogram::default_t_axis(&g, 32);
        assert!(radon_polar(&img, 8, t_axis, 0.1).samples.iter().all(|z| z.norm() == 0.0));
        let v_axis = AffineSinogram::default_v_axis(2.0, 9);
        assert!(radon_affine(&img, v_axis, t_axis, 0.1)
            .samples
            .iter()
            .all(|z| z.norm() == 0.0));
        let sino = radon_circular(&img, g, geometric_radii(0.1, 2.0, 8), 0.5, 16).unwrap();
        assert!(sino.samples.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn affine_zero_slope_row_is_gaussian() {
        let g = Grid2::square(256, 1.0 / 64.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let v_axis = AffineSinogram::default_v_axis(2.0, 9); // v = 0 at i = 4
        let t_axis = Axis1d::centered(128, 2.0 * 2.0 / 128.0);
        let sino = radon_affine(&img, v_axis, t_axis, g.dx / 2.0);
        assert!(v_axis.coord(4).abs() < 1e-12);
        for (j, t) in t_axis.coords().enumerate() {
            let expect = (-PI * t * t).exp();
            assert!(
                (sino.row(4)[j].re - expect).abs() <= 1e-4,
                "t={t}: {} vs {expect}",
                sino.row(4)[j].re
            );
        }
    }

    #[test]
    fn circular_constant_disk_gives_two_pi() {
        let g = Grid2::square(128, 1.0 / 16.0).unwrap();
        let img = phantom::disk(g, 3.5).unwrap();
        let cgrid = Grid2::square(8, 0.25).unwrap();
        let sino = radon_circular(&img, cgrid, vec![0.5, 1.0], 0.5, 64).unwrap();
        // circles well inside the disk see the constant 1
        let v = sino.at(4, 4, 0);
        assert!((v.re - std::f64::consts::TAU).abs() <= 1e-3, "got {}", v.re);
    }

    #[test]
    fn linearity_superposition() {
        let g = Grid2::square(48, 1.0 / 6.0).unwrap();
        let f1 = phantom::band_limited_random(g, 0.4, 1);
        let f2 = phantom::band_limited_random(g, 0.4, 2);
        let sum = Image {
            grid: g,
            samples: f1
                .samples
                .iter()
                .zip(&f2.samples)
                .map(|(a, b)| 2.0 * a - 0.5 * b)
                .collect(),
        };
        let t_axis = PolarSinogram::default_t_axis(&g, 48);
        let (s1, s2, ss) = (
            radon_polar(&f1, 24, t_axis, g.dx / 2.0),
            radon_polar(&f2, 24, t_axis, g.dx / 2.0),
            radon_polar(&sum, 24, t_axis, g.dx / 2.0),
        );
        let mut max_err = 0.0f64;
        for k in 0..ss.samples.len() {
            let lin = 2.0 * s1.samples[k] - 0.5 * s2.samples[k];
            max_err = max_err.max((ss.samples[k] - lin).norm());
        }
        assert!(max_err <= 1e-12, "linearity violated at {max_err}");
    }

    #[test]
    fn square_integrability_gate_diverges_outside_unit_interval() {
        // For α ≥ 1 the weighted norm keeps growing as the radius grid is
        // extended toward zero; for admissible α it stabilizes.
        let g = Grid2::square(64, 1.0 / 8.0).unwrap();
        let img = phantom::gaussian(g, 1.0);
        let norm_with = |r_min: f64, alpha_weight: f64| {
            let radii = geometric_radii(r_min, 2.0, 96);
            let sino = radon_circular(&img, g, radii, 0.5, 64).unwrap();
            sino.l2_norm_weighted(alpha_weight)
        };
        let bad_coarse = norm_with(1e-2, 1.5);
        let bad_fine = norm_with(1e-3, 1.5);
        assert!(
            bad_fine * bad_fine >= 2.0 * bad_coarse * bad_coarse,
            "α=1.5 norm² should at least double: {} -> {}",
            bad_coarse * bad_coarse,
            bad_fine * bad_fine
        );
        let good_coarse = norm_with(1e-2, 0.5);
        let good_fine = norm_with(1e-3, 0.5);
        assert!((good_fine - good_coarse).abs() / good_coarse <= 0.05);
    }
}

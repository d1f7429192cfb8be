//! Centered sampling grids and complex-valued images.

use crate::error::{Error, Result};
use crate::linalg::Vec2;
use num_complex::Complex64;

/// A uniform 2D grid, centered so that the sample coordinates are symmetric
/// about the origin: `origin = -((n1-1)/2 · dx, (n2-1)/2 · dy)`.
///
/// Axis 1 is the `x` coordinate and varies slowest in row-major sample
/// storage; axis 2 is `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2 {
    pub n1: usize,
    pub n2: usize,
    pub origin: Vec2,
    pub dx: f64,
    pub dy: f64,
}

impl Grid2 {
    /// Centered grid with `n1 x n2` samples and spacings `dx, dy`.
    pub fn centered(n1: usize, n2: usize, dx: f64, dy: f64) -> Result<Self> {
        if n1 < 2 || n2 < 2 {
            return Err(Error::invalid("grid needs at least 2 samples per axis"));
        }
        if dx <= 0.0 || dy <= 0.0 {
            return Err(Error::invalid("grid spacings must be positive"));
        }
        let origin = Vec2::new(-((n1 - 1) as f64) / 2.0 * dx, -((n2 - 1) as f64) / 2.0 * dy);
        Ok(Grid2 { n1, n2, origin, dx, dy })
    }

    /// Square centered grid.
    pub fn square(n: usize, dx: f64) -> Result<Self> {
        Grid2::centered(n, n, dx, dx)
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Physical coordinates of sample `(i1, i2)`.
    pub fn point(&self, i1: usize, i2: usize) -> Vec2 {
        Vec2::new(
            self.origin.x + i1 as f64 * self.dx,
            self.origin.y + i2 as f64 * self.dy,
        )
    }

    pub fn index(&self, i1: usize, i2: usize) -> usize {
        i1 * self.n2 + i2
    }

    /// Half-extent of the sample rectangle along x.
    pub fn half_width_x(&self) -> f64 {
        -self.origin.x
    }

    pub fn half_width_y(&self) -> f64 {
        -self.origin.y
    }

    /// Area element `dx · dy`.
    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }

    /// 1D axis coordinates along axis 1.
    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n1).map(move |i| self.origin.x + i as f64 * self.dx)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n2).map(move |i| self.origin.y + i as f64 * self.dy)
    }
}

/// Complex samples on a [`Grid2`]; real data carries zero imaginary parts.
#[derive(Debug, Clone)]
pub struct Image {
    pub grid: Grid2,
    pub samples: Vec<Complex64>,
}

impl Image {
    pub fn zeros(grid: Grid2) -> Self {
        Image { grid, samples: vec![Complex64::default(); grid.len()] }
    }

    /// Build an image by evaluating `f` at every grid point.
    pub fn from_fn(grid: Grid2, mut f: impl FnMut(Vec2) -> Complex64) -> Self {
        let mut samples = Vec::with_capacity(grid.len());
        for i1 in 0..grid.n1 {
            for i2 in 0..grid.n2 {
                samples.push(f(grid.point(i1, i2)));
            }
        }
        Image { grid, samples }
    }

    pub fn from_real_fn(grid: Grid2, mut f: impl FnMut(Vec2) -> f64) -> Self {
        Image::from_fn(grid, |p| Complex64::new(f(p), 0.0))
    }

    pub fn at(&self, i1: usize, i2: usize) -> Complex64 {
        self.samples[self.grid.index(i1, i2)]
    }

    pub fn at_mut(&mut self, i1: usize, i2: usize) -> &mut Complex64 {
        &mut self.samples[self.grid.index(i1, i2)]
    }

    /// `L²(dx)` norm, i.e. the Riemann sum with the cell area attached.
    pub fn l2_norm(&self) -> f64 {
        (self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.cell_area()).sqrt()
    }

    /// Plain discrete mean of the samples.
    pub fn mean(&self) -> Complex64 {
        self.samples.iter().sum::<Complex64>() / self.samples.len() as f64
    }

    pub fn scale(&mut self, s: f64) {
        for z in &mut self.samples {
            *z *= s;
        }
    }

    pub fn check_same_grid(&self, other: &Image) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::ShapeMismatch("images live on different grids".into()));
        }
        Ok(())
    }

    /// Relative L² distance `‖self − other‖ / ‖other‖`.
    pub fn rel_l2_distance(&self, other: &Image) -> Result<f64> {
        self.check_same_grid(other)?;
        let num: f64 = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let den: f64 = other.samples.iter().map(|z| z.norm_sqr()).sum();
        if den == 0.0 {
            return Ok(if num == 0.0 { 0.0 } else { f64::INFINITY });
        }
        Ok((num / den).sqrt())
    }
}

//! Discretization of the group: angle/shear list, log-spaced scales, the
//! translation lattice, and Haar quadrature weights.

use crate::error::{Error, Result};
use crate::signal::Grid2;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Sim2,
    Shearlet,
}

/// The analysis/synthesis grid on the group: translations reuse an image
/// grid, angles (or shears) are uniform, scales are geometric. Per-cell
/// Haar weights are `|a|^{-3} · Δangle · Δa_cell` with `Δa_cell = |a|·ln ρ`,
/// the midpoint rule in logarithmic scale.
#[derive(Debug, Clone)]
pub struct GroupGrid {
    pub kind: GroupKind,
    /// Rotation angles in `[0, 2π)` (SIM(2)) or shears (shearlet group).
    pub angles: Vec<f64>,
    /// Scales; strictly positive for SIM(2), signed for the shearlet group.
    pub scales: Vec<f64>,
    pub b_grid: Grid2,
    pub angle_step: f64,
    pub scale_log_step: f64,
}

impl GroupGrid {
    /// SIM(2) grid: `n_angles` rotations over `[0, 2π)` and `n_scales`
    /// geometric scales in `[a_min, a_max]`.
    pub fn sim2(
        n_angles: usize,
        a_min: f64,
        a_max: f64,
        n_scales: usize,
        b_grid: Grid2,
    ) -> Result<Self> {
        if n_angles < 2 || n_scales < 2 {
            return Err(Error::invalid("group grid needs at least 2 angles and 2 scales"));
        }
        if !(a_min > 0.0 && a_max > a_min) {
            return Err(Error::invalid("need 0 < a_min < a_max"));
        }
        let angles = (0..n_angles)
            .map(|i| std::f64::consts::TAU * i as f64 / n_angles as f64)
            .collect();
        let log_step = (a_max / a_min).ln() / (n_scales - 1) as f64;
        let scales = (0..n_scales)
            .map(|k| a_min * (log_step * k as f64).exp())
            .collect();
        Ok(GroupGrid {
            kind: GroupKind::Sim2,
            angles,
            scales,
            b_grid,
            angle_step: std::f64::consts::TAU / n_angles as f64,
            scale_log_step: log_step,
        })
    }

    /// Shearlet grid: `n_shears` uniform shears spanning `[-s_max, s_max]`
    /// and `2·n_scales` signed geometric scales `±[a_min, a_max]`.
    pub fn shearlet(
        s_max: f64,
        n_shears: usize,
        a_min: f64,
        a_max: f64,
        n_scales: usize,
        b_grid: Grid2,
    ) -> Result<Self> {
        if n_shears < 2 || n_scales < 2 {
            return Err(Error::invalid("group grid needs at least 2 shears and 2 scales"));
        }
        if !(s_max > 0.0 && a_min > 0.0 && a_max > a_min) {
            return Err(Error::invalid("need s_max > 0 and 0 < a_min < a_max"));
        }
        let ds = 2.0 * s_max / n_shears as f64;
        let angles = (0..n_shears)
            .map(|i| -s_max + (i as f64 + 0.5) * ds)
            .collect();
        let log_step = (a_max / a_min).ln() / (n_scales - 1) as f64;
        let positive: Vec<f64> = (0..n_scales)
            .map(|k| a_min * (log_step * k as f64).exp())
            .collect();
        let mut scales = positive.clone();
        scales.extend(positive.iter().map(|a| -a));
        Ok(GroupGrid {
            kind: GroupKind::Shearlet,
            angles,
            scales,
            b_grid,
            angle_step: ds,
            scale_log_step: log_step,
        })
    }

    pub fn n_angles(&self) -> usize {
        self.angles.len()
    }

    pub fn n_scales(&self) -> usize {
        self.scales.len()
    }

    pub fn n_planes(&self) -> usize {
        self.angles.len() * self.scales.len()
    }

    /// Scale-cell width `Δa = |a|·ln ρ`.
    pub fn scale_cell(&self, j: usize) -> f64 {
        self.scales[j].abs() * self.scale_log_step
    }

    /// Haar weight of the `(angle, scale)` cell: `|a|^{-3} Δangle Δa`.
    pub fn haar_weight(&self, j_scale: usize) -> f64 {
        self.scales[j_scale].abs().powi(-3) * self.angle_step * self.scale_cell(j_scale)
    }

    /// One refinement step: double the angle and scale counts over the
    /// same ranges.
    pub fn refine(&self) -> GroupGrid {
        match self.kind {
            GroupKind::Sim2 => {
                let n_scales = self.scales.len();
                GroupGrid::sim2(
                    self.angles.len() * 2,
                    self.scales[0],
                    self.scales[n_scales - 1],
                    n_scales * 2,
                    self.b_grid,
                )
                .expect("refinement of a valid grid is valid")
            }
            GroupKind::Shearlet => {
                let n_pos = self.scales.len() / 2;
                let s_max = -self.angles[0] + self.angle_step / 2.0;
                GroupGrid::shearlet(
                    s_max,
                    self.angles.len() * 2,
                    self.scales[0],
                    self.scales[n_pos - 1],
                    n_pos * 2,
                    self.b_grid,
                )
                .expect("refinement of a valid grid is valid")
            }
        }
    }
}

/// Voice-transform coefficients on a [`GroupGrid`]: one complex plane on
/// the translation lattice per `(scale, angle)` cell, scale-major.
#[derive(Debug, Clone)]
pub struct CoefficientField {
    pub grid: GroupGrid,
    pub planes: Vec<Vec<Complex64>>,
}

impl CoefficientField {
    pub fn zeros(grid: GroupGrid) -> Self {
        let nb = grid.b_grid.len();
        let planes = vec![vec![Complex64::default(); nb]; grid.n_planes()];
        CoefficientField { grid, planes }
    }

    pub fn plane_index(&self, j_scale: usize, i_angle: usize) -> usize {
        j_scale * self.grid.n_angles() + i_angle
    }

    pub fn plane(&self, j_scale: usize, i_angle: usize) -> &[Complex64] {
        &self.planes[self.plane_index(j_scale, i_angle)]
    }

    /// Quadrature of `∫ |coeff|² dμ(g)` over the grid: Haar weights times
    /// the lattice cell area.
    pub fn weighted_energy(&self) -> f64 {
        let cell = self.grid.b_grid.cell_area();
        let mut total = 0.0;
        for j in 0..self.grid.n_scales() {
            let w = self.grid.haar_weight(j) * cell;
            for i in 0..self.grid.n_angles() {
                let plane = self.plane(j, i);
                total += w * plane.iter().map(|z| z.norm_sqr()).sum::<f64>();
            }
        }
        total
    }

    /// Largest |coefficient| and its `(scale, angle, i1, i2)` cell.
    pub fn argmax(&self) -> (f64, usize, usize, usize, usize) {
        let mut best = (0.0, 0, 0, 0, 0);
        for j in 0..self.grid.n_scales() {
            for i in 0..self.grid.n_angles() {
                for (idx, z) in self.plane(j, i).iter().enumerate() {
                    let m = z.norm();
                    if m > best.0 {
                        best = (m, j, i, idx / self.grid.b_grid.n2, idx % self.grid.b_grid.n2);
                    }
                }
            }
        }
        best
    }

    pub fn rel_l2_distance(&self, other: &CoefficientField) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (a, b) in self.planes.iter().zip(&other.planes) {
            for (x, y) in a.iter().zip(b) {
                num += (x - y).norm_sqr();
                den += y.norm_sqr();
            }
        }
        if den == 0.0 {
            return if num == 0.0 { 0.0 } else { f64::INFINITY };
        }
        (num / den).sqrt()
    }
}

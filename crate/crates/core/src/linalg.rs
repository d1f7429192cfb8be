//! Minimal 2-vector / 2x2-matrix arithmetic used by the group actions.

use std::ops::{Add, Mul, Neg, Sub};

/// A point or vector in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    /// Unit vector `w(θ) = (cos θ, sin θ)`.
    pub fn unit(theta: f64) -> Self {
        Vec2::new(theta.cos(), theta.sin())
    }

    /// `w(θ)` rotated by +π/2, i.e. `(-sin θ, cos θ)`.
    pub fn unit_perp(theta: f64) -> Self {
        Vec2::new(-theta.sin(), theta.cos())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

/// Row-major 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Rotation by `phi`.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Mat2::new(c, -s, s, c)
    }

    /// Isotropic dilation `a · I`.
    pub fn dilation(a: f64) -> Self {
        Mat2::new(a, 0.0, 0.0, a)
    }

    /// Shear matrix `N_s = [[1, -s], [0, 1]]`.
    pub fn shear(s: f64) -> Self {
        Mat2::new(1.0, -s, 0.0, 1.0)
    }

    /// Parabolic dilation `A_a = a · diag(1, |a|^{-1/2})`.
    pub fn parabolic_dilation(a: f64) -> Self {
        Mat2::new(a, 0.0, 0.0, a.signum() * a.abs().sqrt())
    }

    pub fn det(self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn transpose(self) -> Mat2 {
        Mat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn inverse(self) -> Mat2 {
        let det = self.det();
        Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det)
    }

    pub fn apply(self, v: Vec2) -> Vec2 {
        Vec2::new(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// Reduce `x` into `[0, modulus)`; the result is always strictly below the
/// modulus even when rounding in `rem_euclid` lands exactly on it.
pub fn reduce_mod(x: f64, modulus: f64) -> f64 {
    let r = x.rem_euclid(modulus);
    if r >= modulus {
        r - modulus
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rotation_is_orthogonal() {
        let r = Mat2::rotation(0.7);
        let rt = r.transpose();
        let id = r * rt;
        assert_abs_diff_eq!(id.a, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(id.b, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(id.d, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn parabolic_dilation_negative_scale() {
        let m = Mat2::parabolic_dilation(-4.0);
        assert_abs_diff_eq!(m.a, -4.0);
        assert_abs_diff_eq!(m.d, -2.0);
        assert_abs_diff_eq!(m.det().abs(), 8.0, epsilon = 1e-12);
    }

    #[test]
    fn reduce_mod_handles_negative_rounding() {
        let r = reduce_mod(-1e-17, std::f64::consts::TAU);
        assert!((0.0..std::f64::consts::TAU).contains(&r));
        assert_abs_diff_eq!(reduce_mod(7.0, std::f64::consts::PI), 7.0 - 2.0 * std::f64::consts::PI, epsilon = 1e-12);
    }
}

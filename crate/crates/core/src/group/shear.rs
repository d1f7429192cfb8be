//! The parabolic shearlet group and its actions.

use crate::linalg::{Mat2, Vec2};

/// An element `(b, s, a)` of the shearlet group: translation, shear, and a
/// nonzero (possibly negative) scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShearletElement {
    pub b: Vec2,
    pub s: f64,
    pub a: f64,
}

/// A non-vertical line `{x : x·n(v) = t}` with `n(v) = (1, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineParamAffine {
    pub v: f64,
    pub t: f64,
}

impl LineParamAffine {
    pub fn new(v: f64, t: f64) -> Self {
        LineParamAffine { v, t }
    }

    /// Normal `n(v) = (1, v)` (not unit length).
    pub fn normal(&self) -> Vec2 {
        Vec2::new(1.0, self.v)
    }
}

impl ShearletElement {
    pub fn new(b: Vec2, s: f64, a: f64) -> Self {
        assert!(a != 0.0 && a.is_finite(), "shearlet scale must be nonzero");
        ShearletElement { b, s, a }
    }

    pub fn identity() -> Self {
        ShearletElement { b: Vec2::ZERO, s: 0.0, a: 1.0 }
    }

    /// The linear part `N_s A_a`.
    pub fn matrix(&self) -> Mat2 {
        Mat2::shear(self.s) * Mat2::parabolic_dilation(self.a)
    }

    /// `(b,s,a)(b',s',a') = (b + N_s A_a b', s + |a|^{1/2} s', aa')`.
    pub fn compose(&self, other: &ShearletElement) -> ShearletElement {
        ShearletElement::new(
            self.b + self.matrix().apply(other.b),
            self.s + self.a.abs().sqrt() * other.s,
            self.a * other.a,
        )
    }

    /// `(b,s,a)^{-1} = (-A_a^{-1} N_s^{-1} b, -|a|^{-1/2} s, a^{-1})`.
    pub fn inverse(&self) -> ShearletElement {
        let lin_inv = self.matrix().inverse();
        ShearletElement::new(
            -lin_inv.apply(self.b),
            -self.s / self.a.abs().sqrt(),
            1.0 / self.a,
        )
    }

    /// Density of the left Haar measure `|a|^{-3} db ds da`.
    pub fn haar_weight(&self) -> f64 {
        self.a.abs().powi(-3)
    }

    pub fn act_plane(&self, x: Vec2) -> Vec2 {
        self.b + self.matrix().apply(x)
    }

    /// Inverse action
    /// `(b,s,a)^{-1}.(v,t) = (|a|^{-1/2}(v-s), (t - n(v)·b)/a)`.
    pub fn act_line_inverse(&self, xi: &LineParamAffine) -> LineParamAffine {
        LineParamAffine::new(
            (xi.v - self.s) / self.a.abs().sqrt(),
            (xi.t - xi.normal().dot(self.b)) / self.a,
        )
    }

    /// Forward action, the inverse of [`Self::act_line_inverse`]:
    /// `g.(v,t) = (s + |a|^{1/2} v, a·t + n(s + |a|^{1/2} v)·b)`.
    pub fn act_line(&self, xi: &LineParamAffine) -> LineParamAffine {
        let v = self.s + self.a.abs().sqrt() * xi.v;
        let t = self.a * xi.t + Vec2::new(1.0, v).dot(self.b);
        LineParamAffine::new(v, t)
    }

    pub fn approx_eq(&self, other: &ShearletElement, tol: f64) -> bool {
        (self.b - other.b).norm() <= tol
            && (self.s - other.s).abs() <= tol
            && (self.a - other.a).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_laws() {
        let e = ShearletElement::identity();
        for &(bx, by, s, a) in &[(0.3, -0.9, 0.8, 1.7), (1.0, 0.2, -1.1, -0.6)] {
            let g = ShearletElement::new(Vec2::new(bx, by), s, a);
            assert!(e.compose(&g).approx_eq(&g, 1e-12));
            assert!(g.compose(&e).approx_eq(&g, 1e-12));
            assert!(g.compose(&g.inverse()).approx_eq(&e, 1e-12));
            assert!(g.inverse().compose(&g).approx_eq(&e, 1e-12));
            assert!(g.inverse().inverse().approx_eq(&g, 1e-12));
        }
    }

    #[test]
    fn hand_evaluated_composition() {
        // s = 1 + |4|^{1/2} · 1 = 3
        let g1 = ShearletElement::new(Vec2::ZERO, 1.0, 4.0);
        let g2 = ShearletElement::new(Vec2::ZERO, 1.0, 1.0);
        let g = g1.compose(&g2);
        assert!(g.approx_eq(&ShearletElement::new(Vec2::ZERO, 3.0, 4.0), 1e-12));
    }

    #[test]
    fn hand_evaluated_inverse_line_action() {
        let g = ShearletElement::new(Vec2::ZERO, 0.0, 4.0);
        let xi = g.act_line_inverse(&LineParamAffine::new(2.0, 8.0));
        assert_abs_diff_eq!(xi.v, 1.0);
        assert_abs_diff_eq!(xi.t, 2.0);
    }

    #[test]
    fn line_action_round_trips() {
        let g = ShearletElement::new(Vec2::new(0.5, -1.2), 0.7, -1.9);
        let xi = LineParamAffine::new(0.4, 1.3);
        let back = g.act_line_inverse(&g.act_line(&xi));
        assert_abs_diff_eq!(back.v, xi.v, epsilon = 1e-12);
        assert_abs_diff_eq!(back.t, xi.t, epsilon = 1e-12);
    }

    #[test]
    fn line_action_is_geometric() {
        let g = ShearletElement::new(Vec2::new(-0.4, 0.8), -0.6, 1.4);
        let xi = LineParamAffine::new(0.9, -0.3);
        // a point on the line x·n(v) = t: x = (t, 0) + y·(-v, 1)
        let point = Vec2::new(xi.t - 0.9 * 1.7, 1.7);
        let moved_point = g.act_plane(point);
        let moved_line = g.act_line(&xi);
        assert_abs_diff_eq!(
            moved_point.dot(moved_line.normal()),
            moved_line.t,
            epsilon = 1e-12
        );
    }

    #[test]
    fn stabilizer_fixes_origin_line() {
        // H = {((0, b2), 0, a)}
        let xi0 = LineParamAffine::new(0.0, 0.0);
        for &(b2, a) in &[(1.5, 0.6), (-0.7, -2.0)] {
            let h = ShearletElement::new(Vec2::new(0.0, b2), 0.0, a);
            let moved = h.act_line(&xi0);
            assert_abs_diff_eq!(moved.v, 0.0, epsilon = 1e-13);
            assert_abs_diff_eq!(moved.t, 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    #[should_panic(expected = "nonzero")]
    fn zero_scale_rejected() {
        let _ = ShearletElement::new(Vec2::ZERO, 0.0, 0.0);
    }
}

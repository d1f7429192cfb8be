//! The similitude group of the plane and its actions.

use crate::linalg::{reduce_mod, Mat2, Vec2};
use std::f64::consts::{PI, TAU};

/// An element `(b, φ, a)` of `SIM(2)`: translation, rotation angle in
/// `[0, 2π)` and strictly positive isotropic scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sim2Element {
    pub b: Vec2,
    pub phi: f64,
    pub a: f64,
}

/// A line `{x : x·w(θ) = t}` with `θ ∈ [0, π)` and signed offset `t`.
///
/// The parametrization identifies `(θ + π, t)` with `(θ, -t)`; the
/// constructor applies that reduction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineParamPolar {
    pub theta: f64,
    pub t: f64,
}

impl LineParamPolar {
    /// Reduce an unconstrained `(θ, t)` pair to the canonical chart,
    /// flipping the sign of `t` once per π-crossing.
    pub fn new(theta: f64, t: f64) -> Self {
        let wraps = (theta / PI).floor();
        let reduced = reduce_mod(theta, PI);
        let sign = if (wraps as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        LineParamPolar { theta: reduced, t: sign * t }
    }

    /// Unit normal `w(θ)` of the line.
    pub fn normal(&self) -> Vec2 {
        Vec2::unit(self.theta)
    }
}

/// A circle with center `c` and radius `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleParam {
    pub c: Vec2,
    pub r: f64,
}

impl CircleParam {
    pub fn new(c: Vec2, r: f64) -> Self {
        assert!(r > 0.0, "circle radius must be positive");
        CircleParam { c, r }
    }
}

impl Sim2Element {
    pub fn new(b: Vec2, phi: f64, a: f64) -> Self {
        assert!(a > 0.0 && a.is_finite(), "SIM(2) scale must be positive");
        Sim2Element { b, phi: reduce_mod(phi, TAU), a }
    }

    pub fn identity() -> Self {
        Sim2Element { b: Vec2::ZERO, phi: 0.0, a: 1.0 }
    }

    /// The linear part `R_φ A_a`.
    pub fn matrix(&self) -> Mat2 {
        Mat2::rotation(self.phi) * Mat2::dilation(self.a)
    }

    /// Group law `(b, φ, a)(b', φ', a') = (b + R_φ A_a b', φ+φ' mod 2π, aa')`.
    pub fn compose(&self, other: &Sim2Element) -> Sim2Element {
        Sim2Element::new(
            self.b + self.matrix().apply(other.b),
            self.phi + other.phi,
            self.a * other.a,
        )
    }

    /// `(b, φ, a)^{-1} = (-A_a^{-1} R_φ^{-1} b, -φ mod 2π, a^{-1})`.
    pub fn inverse(&self) -> Sim2Element {
        let lin_inv = Mat2::dilation(1.0 / self.a) * Mat2::rotation(-self.phi);
        Sim2Element::new(-lin_inv.apply(self.b), -self.phi, 1.0 / self.a)
    }

    /// Density of the left Haar measure `a^{-3} db dφ da` at this element.
    pub fn haar_weight(&self) -> f64 {
        self.a.powi(-3)
    }

    /// Modular function `Δ(b, φ, a) = a^{-2}`.
    pub fn modular(&self) -> f64 {
        self.a.powi(-2)
    }

    /// Canonical action on the plane, `(b, k)[x] = b + kx`.
    pub fn act_plane(&self, x: Vec2) -> Vec2 {
        self.b + self.matrix().apply(x)
    }

    /// Forward action on lines: `g.(θ, t) = (θ+φ, a·t + w(θ+φ)·b)` up to
    /// the chart reduction.
    pub fn act_line(&self, xi: &LineParamPolar) -> LineParamPolar {
        let theta_raw = xi.theta + self.phi;
        let t_raw = self.a * xi.t + Vec2::unit(theta_raw).dot(self.b);
        LineParamPolar::new(theta_raw, t_raw)
    }

    /// Inverse action `g^{-1}.(θ, t) = (θ-φ, (t - w(θ)·b)/a)` up to the
    /// chart reduction.
    pub fn act_line_inverse(&self, xi: &LineParamPolar) -> LineParamPolar {
        let theta_raw = xi.theta - self.phi;
        let t_raw = (xi.t - xi.normal().dot(self.b)) / self.a;
        LineParamPolar::new(theta_raw, t_raw)
    }

    /// Action on circles, `(b, φ, a).(c, r) = (b + a R_φ c, a r)`.
    pub fn act_circle(&self, xi: &CircleParam) -> CircleParam {
        CircleParam::new(self.b + self.matrix().apply(xi.c), self.a * xi.r)
    }

    pub fn act_circle_inverse(&self, xi: &CircleParam) -> CircleParam {
        let lin_inv = Mat2::dilation(1.0 / self.a) * Mat2::rotation(-self.phi);
        CircleParam::new(lin_inv.apply(xi.c - self.b), xi.r / self.a)
    }

    pub fn approx_eq(&self, other: &Sim2Element, tol: f64) -> bool {
        // compare angles on the circle
        let dphi = reduce_mod(self.phi - other.phi + PI, TAU) - PI;
        (self.b - other.b).norm() <= tol && dphi.abs() <= tol && (self.a - other.a).abs() <= tol
    }
}

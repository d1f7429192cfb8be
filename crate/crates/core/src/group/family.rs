//! Family selection and the family-dependent structure: relatively
//! invariant measures, characters, Borel sections and the cocycle.

use super::shear::{LineParamAffine, ShearletElement};
use super::sim2::{CircleParam, LineParamPolar, Sim2Element};
use crate::error::{Error, Result};
use crate::linalg::Vec2;

/// Which of the three worked dual pairs an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadonFamily {
    /// Lines in polar parametrization, driven by SIM(2).
    Polar,
    /// Non-vertical lines in graph parametrization, driven by the
    /// shearlet group.
    Affine,
    /// Circles with center and radius, driven by SIM(2); `alpha` is the
    /// exponent of the measure `dc dr / r^α` and must lie in `(0, 1)`,
    /// outside of which the transform is not square-integrable.
    Circular { alpha: f64 },
}

impl RadonFamily {
    pub fn circular(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::domain(format!(
                "circular family requires alpha in (0, 1); got {alpha}"
            )));
        }
        Ok(RadonFamily::Circular { alpha })
    }

    /// Default circular family with `α = 1/2`.
    pub fn circular_default() -> Self {
        RadonFamily::Circular { alpha: 0.5 }
    }
}

/// An element of whichever group drives the chosen family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupElement {
    Sim2(Sim2Element),
    Shearlet(ShearletElement),
}

impl GroupElement {
    pub fn as_sim2(&self) -> Result<&Sim2Element> {
        match self {
            GroupElement::Sim2(g) => Ok(g),
            GroupElement::Shearlet(_) => {
                Err(Error::FamilyMismatch("expected a SIM(2) element".into()))
            }
        }
    }

    pub fn as_shearlet(&self) -> Result<&ShearletElement> {
        match self {
            GroupElement::Shearlet(g) => Ok(g),
            GroupElement::Sim2(_) => {
                Err(Error::FamilyMismatch("expected a shearlet-group element".into()))
            }
        }
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Sim2(a), GroupElement::Sim2(b)) => {
                Ok(GroupElement::Sim2(a.compose(b)))
            }
            (GroupElement::Shearlet(a), GroupElement::Shearlet(b)) => {
                Ok(GroupElement::Shearlet(a.compose(b)))
            }
            _ => Err(Error::FamilyMismatch("cannot compose across groups".into())),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Sim2(g) => GroupElement::Sim2(g.inverse()),
            GroupElement::Shearlet(g) => GroupElement::Shearlet(g.inverse()),
        }
    }
}

/// A point of the parameter space Ξ of the chosen family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XiPoint {
    Line(LineParamPolar),
    AffineLine(LineParamAffine),
    Circle(CircleParam),
}

/// The three positive characters attached to a family: `β` scales the
/// measure on Ξ, `γ` is the extension of the isotropy character on the
/// reference manifold, and `χ` is the intertwining character of the Radon
/// transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterKind {
    Beta,
    Gamma,
    Chi,
}

impl RadonFamily {
    /// Origin `ξ0` of the parameter space.
    pub fn xi0(&self) -> XiPoint {
        match self {
            RadonFamily::Polar => XiPoint::Line(LineParamPolar::new(0.0, 0.0)),
            RadonFamily::Affine => XiPoint::AffineLine(LineParamAffine::new(0.0, 0.0)),
            RadonFamily::Circular { .. } => {
                XiPoint::Circle(CircleParam::new(Vec2::new(1.0, 0.0), 1.0))
            }
        }
    }

    /// Value of the named character at `g`.
    pub fn character(&self, kind: CharacterKind, g: &GroupElement) -> Result<f64> {
        Ok(match self {
            RadonFamily::Polar => {
                let a = g.as_sim2()?.a;
                match kind {
                    CharacterKind::Beta => a,
                    CharacterKind::Gamma => a,
                    CharacterKind::Chi => a.powf(-0.5),
                }
            }
            RadonFamily::Affine => {
                let a = g.as_shearlet()?.a.abs();
                match kind {
                    CharacterKind::Beta => a.powf(1.5),
                    CharacterKind::Gamma => a.sqrt(),
                    CharacterKind::Chi => a.powf(-0.5),
                }
            }
            RadonFamily::Circular { alpha } => {
                let a = g.as_sim2()?.a;
                match kind {
                    CharacterKind::Beta => a.powf(3.0 - alpha),
                    CharacterKind::Gamma => 1.0,
                    CharacterKind::Chi => a.powf((alpha - 1.0) / 2.0),
                }
            }
        })
    }

    /// The intertwining character `χ(g)`.
    pub fn chi(&self, g: &GroupElement) -> Result<f64> {
        self.character(CharacterKind::Chi, g)
    }

    /// Borel section `σ : Ξ → G` with `σ(ξ).ξ0 = ξ` and `σ(ξ0) = e`.
    pub fn section_sigma(&self, xi: &XiPoint) -> Result<GroupElement> {
        match (self, xi) {
            (RadonFamily::Polar, XiPoint::Line(l)) => Ok(GroupElement::Sim2(
                Sim2Element::new(l.normal() * l.t, l.theta, 1.0),
            )),
            (RadonFamily::Affine, XiPoint::AffineLine(l)) => Ok(GroupElement::Shearlet(
                ShearletElement::new(Vec2::new(l.t, 0.0), l.v, 1.0),
            )),
            (RadonFamily::Circular { .. }, XiPoint::Circle(c)) => Ok(GroupElement::Sim2(
                Sim2Element::new(c.c - Vec2::new(c.r, 0.0), 0.0, c.r),
            )),
            _ => Err(Error::FamilyMismatch("ξ does not belong to this family".into())),
        }
    }

    /// Base section `s(x) = (x, 0, 1)` in the family's group.
    pub fn base_section(&self, x: Vec2) -> GroupElement {
        match self {
            RadonFamily::Polar | RadonFamily::Circular { .. } => {
                GroupElement::Sim2(Sim2Element::new(x, 0.0, 1.0))
            }
            RadonFamily::Affine => GroupElement::Shearlet(ShearletElement::new(x, 0.0, 1.0)),
        }
    }

    /// Forward action `g.ξ`.
    pub fn act(&self, g: &GroupElement, xi: &XiPoint) -> Result<XiPoint> {
        match (self, xi) {
            (RadonFamily::Polar, XiPoint::Line(l)) => {
                Ok(XiPoint::Line(g.as_sim2()?.act_line(l)))
            }
            (RadonFamily::Affine, XiPoint::AffineLine(l)) => {
                Ok(XiPoint::AffineLine(g.as_shearlet()?.act_line(l)))
            }
            (RadonFamily::Circular { .. }, XiPoint::Circle(c)) => {
                Ok(XiPoint::Circle(g.as_sim2()?.act_circle(c)))
            }
            _ => Err(Error::FamilyMismatch("ξ does not belong to this family".into())),
        }
    }

    /// Inverse action `g^{-1}.ξ`.
    pub fn act_inverse(&self, g: &GroupElement, xi: &XiPoint) -> Result<XiPoint> {
        match (self, xi) {
            (RadonFamily::Polar, XiPoint::Line(l)) => {
                Ok(XiPoint::Line(g.as_sim2()?.act_line_inverse(l)))
            }
            (RadonFamily::Affine, XiPoint::AffineLine(l)) => {
                Ok(XiPoint::AffineLine(g.as_shearlet()?.act_line_inverse(l)))
            }
            (RadonFamily::Circular { .. }, XiPoint::Circle(c)) => {
                Ok(XiPoint::Circle(g.as_sim2()?.act_circle_inverse(c)))
            }
            _ => Err(Error::FamilyMismatch("ξ does not belong to this family".into())),
        }
    }

    /// The cocycle `m(g, ξ) = σ(ξ)^{-1} g σ(g^{-1}.ξ)`, which always lands
    /// in the isotropy subgroup of `ξ0`.
    pub fn cocycle(&self, g: &GroupElement, xi: &XiPoint) -> Result<GroupElement> {
        let sigma_xi = self.section_sigma(xi)?;
        let moved = self.act_inverse(g, xi)?;
        let sigma_moved = self.section_sigma(&moved)?;
        sigma_xi.inverse().compose(g)?.compose(&sigma_moved)
    }

    /// Distance of `g.ξ0` from `ξ0`; zero (to rounding) exactly when `g`
    /// stabilizes the origin of Ξ.
    pub fn xi0_displacement(&self, g: &GroupElement) -> Result<f64> {
        let moved = self.act(g, &self.xi0())?;
        Ok(match (self.xi0(), moved) {
            (XiPoint::Line(a), XiPoint::Line(b)) => {
                // lines identify (θ+π, t) with (θ, -t); take the closer chart copy
                let direct = (a.theta - b.theta).abs() + (a.t - b.t).abs();
                let wrapped =
                    (std::f64::consts::PI - (a.theta - b.theta).abs()) + (a.t + b.t).abs();
                direct.min(wrapped)
            }
            (XiPoint::AffineLine(a), XiPoint::AffineLine(b)) => {
                (a.v - b.v).abs() + (a.t - b.t).abs()
            }
            (XiPoint::Circle(a), XiPoint::Circle(b)) => {
                (a.c - b.c).norm() + (a.r - b.r).abs()
            }
            _ => unreachable!("actions preserve the Ξ variant"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sim2(rng: &mut ChaCha8Rng) -> Sim2Element {
        Sim2Element::new(
            Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
            rng.gen_range(0.0..std::f64::consts::TAU),
            rng.gen_range(0.2..4.0),
        )
    }

    fn random_shear(rng: &mut ChaCha8Rng) -> ShearletElement {
        let a: f64 = rng.gen_range(0.2..3.0);
        let a = if rng.gen_bool(0.5) { a } else { -a };
        ShearletElement::new(
            Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
            rng.gen_range(-1.5..1.5),
            a,
        )
    }

    #[test]
    fn character_values_from_the_worked_examples() {
        let g4 = GroupElement::Sim2(Sim2Element::new(Vec2::new(0.3, 0.1), 1.0, 4.0));
        assert_abs_diff_eq!(
            RadonFamily::Polar.character(CharacterKind::Chi, &g4).unwrap(),
            0.5
        );
        let s4 = GroupElement::Shearlet(ShearletElement::new(Vec2::ZERO, 0.4, 4.0));
        assert_abs_diff_eq!(
            RadonFamily::Affine.character(CharacterKind::Beta, &s4).unwrap(),
            8.0
        );
        let circ = RadonFamily::circular(0.5).unwrap();
        assert_abs_diff_eq!(
            circ.character(CharacterKind::Chi, &g4).unwrap(),
            4.0f64.powf(-0.25)
        );
        assert_abs_diff_eq!(circ.character(CharacterKind::Gamma, &g4).unwrap(), 1.0);
    }

    #[test]
    fn character_multiplicativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (g1, g2) = (random_sim2(&mut rng), random_sim2(&mut rng));
            let g12 = GroupElement::Sim2(g1.compose(&g2));
            for family in [RadonFamily::Polar, RadonFamily::circular(0.37).unwrap()] {
                for kind in [CharacterKind::Beta, CharacterKind::Gamma, CharacterKind::Chi] {
                    let lhs = family.character(kind, &g12).unwrap();
                    let rhs = family.character(kind, &GroupElement::Sim2(g1)).unwrap()
                        * family.character(kind, &GroupElement::Sim2(g2)).unwrap();
                    assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
                }
            }
            let (h1, h2) = (random_shear(&mut rng), random_shear(&mut rng));
            let h12 = GroupElement::Shearlet(h1.compose(&h2));
            for kind in [CharacterKind::Beta, CharacterKind::Gamma, CharacterKind::Chi] {
                let lhs = RadonFamily::Affine.character(kind, &h12).unwrap();
                let rhs = RadonFamily::Affine
                    .character(kind, &GroupElement::Shearlet(h1))
                    .unwrap()
                    * RadonFamily::Affine
                        .character(kind, &GroupElement::Shearlet(h2))
                        .unwrap();
                assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
            }
        }
    }

    #[test]
    fn sections_hit_their_targets() {
        // σ(ξ0) = e and σ(ξ).ξ0 = ξ
        let families = [
            RadonFamily::Polar,
            RadonFamily::Affine,
            RadonFamily::circular(0.5).unwrap(),
        ];
        for family in families {
            let xi0 = family.xi0();
            let sigma0 = family.section_sigma(&xi0).unwrap();
            match sigma0 {
                GroupElement::Sim2(g) => assert!(g.approx_eq(&Sim2Element::identity(), 1e-14)),
                GroupElement::Shearlet(g) => {
                    assert!(g.approx_eq(&ShearletElement::identity(), 1e-14))
                }
            }
        }
        // frozen examples
        let polar = RadonFamily::Polar
            .section_sigma(&XiPoint::Line(LineParamPolar::new(0.0, 2.0)))
            .unwrap();
        let g = polar.as_sim2().unwrap();
        assert!(g.approx_eq(&Sim2Element::new(Vec2::new(2.0, 0.0), 0.0, 1.0), 1e-14));
        let circ = RadonFamily::circular(0.5)
            .unwrap()
            .section_sigma(&XiPoint::Circle(CircleParam::new(Vec2::new(3.0, 0.0), 2.0)))
            .unwrap();
        let g = circ.as_sim2().unwrap();
        assert!(g.approx_eq(&Sim2Element::new(Vec2::new(1.0, 0.0), 0.0, 2.0), 1e-14));
    }

    #[test]
    fn sigma_moves_origin_to_xi() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let line = XiPoint::Line(LineParamPolar::new(
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(-2.0..2.0),
            ));
            let sigma = RadonFamily::Polar.section_sigma(&line).unwrap();
            let moved = RadonFamily::Polar.act(&sigma, &RadonFamily::Polar.xi0()).unwrap();
            match (line, moved) {
                (XiPoint::Line(a), XiPoint::Line(b)) => {
                    assert_abs_diff_eq!(a.theta, b.theta, epsilon = 1e-12);
                    assert_abs_diff_eq!(a.t, b.t, epsilon = 1e-12);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn cocycle_lands_in_the_stabilizer() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let circ = RadonFamily::circular(0.7).unwrap();
        for _ in 0..10 {
            let g = GroupElement::Sim2(random_sim2(&mut rng));
            let xi = XiPoint::Line(LineParamPolar::new(
                rng.gen_range(0.0..std::f64::consts::PI),
                rng.gen_range(-2.0..2.0),
            ));
            let m = RadonFamily::Polar.cocycle(&g, &xi).unwrap();
            assert!(RadonFamily::Polar.xi0_displacement(&m).unwrap() <= 1e-10);

            let xic = XiPoint::Circle(CircleParam::new(
                Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
                rng.gen_range(0.3..3.0),
            ));
            let mc = circ.cocycle(&g, &xic).unwrap();
            assert!(circ.xi0_displacement(&mc).unwrap() <= 1e-10);
            // γ ≡ 1 on the circular family
            assert_abs_diff_eq!(circ.character(CharacterKind::Gamma, &mc).unwrap(), 1.0);

            let h = GroupElement::Shearlet(random_shear(&mut rng));
            let xia = XiPoint::AffineLine(LineParamAffine::new(
                rng.gen_range(-1.5..1.5),
                rng.gen_range(-2.0..2.0),
            ));
            let ma = RadonFamily::Affine.cocycle(&h, &xia).unwrap();
            assert!(RadonFamily::Affine.xi0_displacement(&ma).unwrap() <= 1e-10);
        }
        // identity cocycle
        let e = GroupElement::Sim2(Sim2Element::identity());
        let m = RadonFamily::Polar
            .cocycle(&e, &XiPoint::Line(LineParamPolar::new(0.9, 0.4)))
            .unwrap();
        assert!(m.as_sim2().unwrap().approx_eq(&Sim2Element::identity(), 1e-12));
    }

    #[test]
    fn gamma_of_cocycle_is_independent_of_xi() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let g = GroupElement::Sim2(random_sim2(&mut rng));
            let at_origin = RadonFamily::Polar
                .cocycle(&g, &RadonFamily::Polar.xi0())
                .unwrap();
            let gamma0 = RadonFamily::Polar
                .character(CharacterKind::Gamma, &at_origin)
                .unwrap();
            for _ in 0..10 {
                let xi = XiPoint::Line(LineParamPolar::new(
                    rng.gen_range(0.0..std::f64::consts::PI),
                    rng.gen_range(-2.0..2.0),
                ));
                let m = RadonFamily::Polar.cocycle(&g, &xi).unwrap();
                let gamma = RadonFamily::Polar.character(CharacterKind::Gamma, &m).unwrap();
                assert!((gamma - gamma0).abs() <= 1e-10 * gamma0);
            }
        }
    }

    #[test]
    fn alpha_outside_unit_interval_rejected() {
        assert!(RadonFamily::circular(0.0).is_err());
        assert!(RadonFamily::circular(1.0).is_err());
        assert!(RadonFamily::circular(1.3).is_err());
        assert!(RadonFamily::circular(0.5).is_ok());
    }

    #[test]
    fn family_mismatch_is_an_error() {
        let g = GroupElement::Shearlet(ShearletElement::identity());
        assert!(RadonFamily::Polar.character(CharacterKind::Chi, &g).is_err());
        let xi = XiPoint::Circle(CircleParam::new(Vec2::ZERO + Vec2::new(1.0, 0.0), 1.0));
        assert!(RadonFamily::Affine.section_sigma(&xi).is_err());
    }
}

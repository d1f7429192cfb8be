//! Line and circle quadrature against sampled images.

use super::grid::Image;
use super::interp::cubic_sample;
use crate::linalg::Vec2;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Intersect the parameter interval of a line `p(y) = base + y·dir` with the
/// slab `lo ≤ p·axis ≤ hi`. Returns `None` when the line misses the slab.
fn clip_interval(
    range: (f64, f64),
    base: f64,
    dir: f64,
    lo: f64,
    hi: f64,
) -> Option<(f64, f64)> {
    let (mut a, mut b) = range;
    if dir.abs() < 1e-300 {
        if base < lo || base > hi {
            return None;
        }
        return Some((a, b));
    }
    let (mut ya, mut yb) = ((lo - base) / dir, (hi - base) / dir);
    if ya > yb {
        std::mem::swap(&mut ya, &mut yb);
    }
    a = a.max(ya);
    b = b.min(yb);
    if a >= b {
        None
    } else {
        Some((a, b))
    }
}

fn bbox(img: &Image) -> (Vec2, Vec2) {
    let g = &img.grid;
    let lo = g.origin;
    let hi = Vec2::new(
        g.origin.x + (g.n1 - 1) as f64 * g.dx,
        g.origin.y + (g.n2 - 1) as f64 * g.dy,
    );
    (lo, hi)
}

/// Composite midpoint quadrature of `y ↦ f(base + y·dir)` over `[a, b]`.
fn midpoint_line(img: &Image, base: Vec2, dir: Vec2, a: f64, b: f64, step: f64) -> Complex64 {
    let n = (((b - a) / step).ceil() as usize).max(1);
    let h = (b - a) / n as f64;
    let mut acc = Complex64::default();
    for i in 0..n {
        let y = a + (i as f64 + 0.5) * h;
        acc += cubic_sample(img, base + dir * y);
    }
    acc * h
}

/// Arclength integral of `img` over the line `{x : x·ω = t}`, parametrized
/// as `x = t·ω + y·ω⊥` and integrated in `y` with the composite midpoint
/// rule at the requested step. Zero when the line misses the grid.
pub fn line_integral_arclength(img: &Image, omega: Vec2, t: f64, step: f64) -> Complex64 {
    assert!(step > 0.0, "step must be positive");
    let base = omega * t;
    let dir = Vec2::new(-omega.y, omega.x);
    let (lo, hi) = bbox(img);
    let span = {
        let diag = (hi - lo).norm();
        (-diag, diag)
    };
    let Some(range) = clip_interval(span, base.x, dir.x, lo.x, hi.x) else {
        return Complex64::default();
    };
    let Some((a, b)) = clip_interval(range, base.y, dir.y, lo.y, hi.y) else {
        return Complex64::default();
    };
    midpoint_line(img, base, dir, a, b, step)
}

/// Graph-parametrized line integral `∫ f(t - v·y, y) dy`; the measure is
/// `dy`, not arclength.
pub fn line_integral_graph(img: &Image, v: f64, t: f64, step: f64) -> Complex64 {
    assert!(step > 0.0, "step must be positive");
    let base = Vec2::new(t, 0.0);
    let dir = Vec2::new(-v, 1.0);
    let (lo, hi) = bbox(img);
    let Some(range) = clip_interval((lo.y, hi.y), base.x, dir.x, lo.x, hi.x) else {
        return Complex64::default();
    };
    let (a, b) = range;
    if a >= b {
        return Complex64::default();
    }
    midpoint_line(img, base, dir, a, b, step)
}

/// Circle integral `∫_0^{2π} f(c - r·w(φ)) dφ` by the trapezoid rule, which
/// is spectrally accurate for smooth integrands on the circle.
pub fn circle_integral(img: &Image, c: Vec2, r: f64, nphi: usize) -> Complex64 {
    assert!(r > 0.0, "radius must be positive");
    assert!(nphi >= 8, "need at least 8 circle nodes");
    // skip circles that cannot touch the grid
    let (lo, hi) = bbox(img);
    let nearest = Vec2::new(c.x.clamp(lo.x, hi.x), c.y.clamp(lo.y, hi.y));
    if (c - nearest).norm() > r + (hi - lo).norm() {
        return Complex64::default();
    }
    let mut acc = Complex64::default();
    for i in 0..nphi {
        let phi = TAU * i as f64 / nphi as f64;
        acc += cubic_sample(img, c - Vec2::unit(phi) * r);
    }
    acc * (TAU / nphi as f64)
}

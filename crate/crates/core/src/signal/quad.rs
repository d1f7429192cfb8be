//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

/// Value and accumulated error estimate of a quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
}

const MAX_DEPTH: u32 = 48;

struct Simpson<'a, F: Fn(f64) -> f64> {
    f: &'a F,
    err_acc: f64,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    fn eval(&self, x: f64) -> Result<f64> {
        let y = (self.f)(x);
        if !y.is_finite() {
            return Err(Error::QuadratureFailure(format!("integrand not finite at x = {x}")));
        }
        Ok(y)
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        &mut self,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let h = b - a;
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let err = (left + right - whole) / 15.0;
        if err.abs() <= tol || h <= f64::EPSILON * (a.abs() + b.abs()) {
            self.err_acc += err.abs();
            return Ok(left + right + err);
        }
        if depth == 0 {
            return Err(Error::QuadratureFailure(format!(
                "max depth reached on [{a}, {b}] with residual {err:e}"
            )));
        }
        let l = self.recurse(a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?;
        let r = self.recurse(m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?;
        Ok(l + r)
    }
}

/// Adaptive Simpson rule on `[a, b]` with absolute tolerance `tol`.
pub fn adaptive_quad(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(a < b) {
        return Err(Error::invalid("adaptive_quad needs a < b"));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut s = Simpson { f: &f, err_acc: 0.0 };
    let fa = s.eval(a)?;
    let m = 0.5 * (a + b);
    let fm = s.eval(m)?;
    let fb = s.eval(b)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let value = s.recurse(a, b, fa, fm, fb, whole, tol, MAX_DEPTH)?;
    Ok(QuadratureResult { value, error_estimate: s.err_acc.max(f64::EPSILON * value.abs()) })
}

/// Adaptive Simpson over consecutive segments `[breaks[i], breaks[i+1]]`.
/// Seeding the recursion with explicit segments keeps narrow features from
/// slipping between the initial probe points.
pub fn adaptive_quad_segmented(
    f: impl Fn(f64) -> f64,
    breaks: &[f64],
    tol: f64,
) -> Result<QuadratureResult> {
    if breaks.len() < 2 {
        return Err(Error::invalid("need at least two break points"));
    }
    let mut value = 0.0;
    let mut err = 0.0;
    let seg_tol = tol / (breaks.len() - 1) as f64;
    for pair in breaks.windows(2) {
        let q = adaptive_quad(&f, pair[0], pair[1], seg_tol)?;
        value += q.value;
        err += q.error_estimate;
    }
    Ok(QuadratureResult { value, error_estimate: err })
}

//! Bessel function of the first kind, order zero.
//!
//! Classical two-interval scheme: a rational approximation with the first
//! two zeros factored out on `[0, 5]`, and the modulus/phase (Hankel) form
//! with rational `P`, `Q` beyond. Coefficients are the standard Cephes
//! tables; absolute error stays well below 1e-8 over `|x| ≤ 1e6`.

const DR1: f64 = 5.783185962946784521175995758455807035071;
const DR2: f64 = 30.47126234366208639907816317502275584842;

const RP: [f64; 4] = [
    -4.79443220978201773821e9,
    1.95617491946556577543e12,
    -2.49248344360967716204e14,
    9.70862251047306323952e15,
];

const RQ: [f64; 8] = [
    4.99563147152651017219e2,
    1.73785401676374683123e5,
    4.84409658339962045305e7,
    1.11855537045356834862e10,
    2.11277520115489217587e12,
    3.10518229857422583814e14,
    3.18121955943204943306e16,
    1.71086294081043136091e18,
];

const PP: [f64; 7] = [
    7.96936729297347051624e-4,
    8.28352392107440799803e-2,
    1.23953371646414299388e0,
    5.44725003058768775090e0,
    8.74716500199817011941e0,
    5.30324038235394892183e0,
    9.99999999999999997821e-1,
];

const PQ: [f64; 7] = [
    9.24408810558863637013e-4,
    8.56288474354474431428e-2,
    1.25352743901058953537e0,
    5.47097740330417105182e0,
    8.76190883237069594232e0,
    5.30605288235394617618e0,
    1.00000000000000000218e0,
];

const QP: [f64; 8] = [
    -1.13663838898469149931e-2,
    -1.28252718670509318512e0,
    -1.95539544257735972385e1,
    -9.32060152123768231369e1,
    -1.77681167980488790968e2,
    -1.47077505154951170175e2,
    -5.14105326766599330220e1,
    -6.05014350600728481186e0,
];

const QQ: [f64; 7] = [
    6.43178256118178023184e1,
    8.56430025976980587198e2,
    3.88240183605401609683e3,
    7.24046774195652478189e3,
    5.93072701187316984827e3,
    2.06209331660327847417e3,
    2.42005740240291393179e2,
];

const SQ2OPI: f64 = 0.79788456080286535587989; // sqrt(2/π)
const PIO4: f64 = std::f64::consts::FRAC_PI_4;

fn polevl(x: f64, coef: &[f64]) -> f64 {
    coef.iter().fold(0.0, |acc, &c| acc * x + c)
}

/// Horner evaluation with an implicit leading coefficient of 1.
fn p1evl(x: f64, coef: &[f64]) -> f64 {
    coef.iter().fold(1.0, |acc, &c| acc * x + c)
}

/// `J_0(x)`, even in `x`.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x < 5.0 {
        let z = x * x;
        if x < 1.0e-5 {
            return 1.0 - z / 4.0;
        }
        let p = (z - DR1) * (z - DR2);
        return p * polevl(z, &RP) / p1evl(z, &RQ);
    }
    let w = 5.0 / x;
    let z = 25.0 / (x * x);
    let p = polevl(z, &PP) / polevl(z, &PQ);
    let q = polevl(z, &QP) / p1evl(z, &QQ);
    let xn = x - PIO4;
    (p * xn.cos() - w * q * xn.sin()) * SQ2OPI / x.sqrt()
}

/// Truncated power series `Σ (-x²/4)^k / (k!)²`. Independent of
/// [`bessel_j0`]; only trustworthy for moderate arguments (|x| ≲ 15) where
/// the alternating terms stay small enough for f64.
pub fn bessel_j0_series(x: f64) -> f64 {
    let q = -x * x / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-3) {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn value_at_zero_and_evenness() {
        assert_eq!(bessel_j0(0.0), 1.0);
        for &x in &[0.3, 1.7, 4.9, 5.1, 42.0] {
            assert_eq!(bessel_j0(x), bessel_j0(-x));
        }
    }

    #[test]
    fn matches_series_on_moderate_arguments() {
        let mut x = 0.0;
        while x <= 12.0 {
            assert_abs_diff_eq!(bessel_j0(x), bessel_j0_series(x), epsilon = 1e-10);
            x += 0.0625;
        }
    }

    #[test]
    fn first_zero_by_bisection_of_series() {
        // locate the first positive zero with the independent series
        let (mut lo, mut hi) = (2.0f64, 3.0f64);
        assert!(bessel_j0_series(lo) > 0.0 && bessel_j0_series(hi) < 0.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if bessel_j0_series(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let zero = 0.5 * (lo + hi);
        assert_abs_diff_eq!(zero, 2.404825557695773, epsilon = 1e-8);
        assert!(bessel_j0(zero).abs() <= 1e-10);
    }

    #[test]
    fn large_argument_asymptotic() {
        let x = 100.0;
        let asym = (2.0 / (PI * x)).sqrt() * (x - PI / 4.0).cos();
        assert_abs_diff_eq!(bessel_j0(x), asym, epsilon = 1e-4);
        // stays finite and sane far out
        let far = bessel_j0(1.0e6);
        assert!(far.abs() < 1e-3);
    }

    #[test]
    fn branch_crossover_is_continuous() {
        let eps = 1e-9;
        let left = bessel_j0(5.0 - eps);
        let right = bessel_j0(5.0 + eps);
        assert!((left - right).abs() <= 1e-8, "crossover jump {}", (left - right).abs());
        assert_abs_diff_eq!(bessel_j0(5.0), bessel_j0_series(5.0), epsilon = 1e-10);
    }
}

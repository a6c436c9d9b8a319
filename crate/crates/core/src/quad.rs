//! Simpson quadrature on analytic integrands and on sampled grids.

use crate::scalar::{from_u32, lit, Real};

/// Composite Simpson on `[a, b]`, doubling the panel count until two successive
/// estimates differ by at most `rel_tol` (relative). Returns the last estimate
/// and whether the tolerance was met.
pub fn simpson_refined<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, rel_tol: T, max_doublings: u32) -> (T, bool) {
    let mut panels: u32 = 64;
    let h0 = (b - a) / from_u32(panels);
    // ends, odd interior points, even interior points
    let ends = f(a) + f(b);
    let mut evens = T::zero();
    let mut odds = T::zero();
    for i in 1..panels {
        let v = f(a + h0 * from_u32(i));
        if i % 2 == 0 {
            evens = evens + v;
        } else {
            odds = odds + v;
        }
    }
    let estimate = |ends: T, odds: T, evens: T, h: T| h / lit(3.0) * (ends + lit::<T>(4.0) * odds + lit::<T>(2.0) * evens);
    let mut h = h0;
    let mut prev = estimate(ends, odds, evens, h);
    for _ in 0..max_doublings {
        panels *= 2;
        h = h / lit(2.0);
        evens = evens + odds;
        odds = T::zero();
        for i in (1..panels).step_by(2) {
            odds = odds + f(a + h * from_u32(i));
        }
        let cur = estimate(ends, odds, evens, h);
        if (cur - prev).abs() <= rel_tol * cur.abs() {
            return (cur, true);
        }
        prev = cur;
    }
    (prev, false)
}

/// Simpson's rule on a (possibly non-uniform) sampled grid.
pub fn simpson_samples<T: Real>(x: &[T], y: &[T]) -> T {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n < 2 {
        return T::zero();
    }
    let mut sum = T::zero();
    let mut i = 0;
    let six: T = lit(6.0);
    let two: T = lit(2.0);
    while i + 2 < n {
        let h0 = x[i + 1] - x[i];
        let h1 = x[i + 2] - x[i + 1];
        let hs = h0 + h1;
        sum = sum
            + hs / six * ((two - h1 / h0) * y[i] + hs * hs / (h0 * h1) * y[i + 1] + (two - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if i + 1 < n {
        sum = sum + (x[i + 1] - x[i]) * (y[i] + y[i + 1]) / two;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refined_gaussian() {
        let (v, ok) = simpson_refined(|x: f64| (-x * x).exp(), -10.0, 10.0, 1e-12, 20);
        assert!(ok);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn nonuniform_quadratic_is_exact() {
        let x: Vec<f64> = (0..=20).map(|i| (i as f64 / 20.0).powi(2) * 3.0).collect();
        let y: Vec<f64> = x.iter().map(|&t| 3.0 * t * t - 2.0 * t + 1.0).collect();
        let want = 21.0;
        assert!((simpson_samples(&x, &y) - want).abs() < 1e-11);
    }
}

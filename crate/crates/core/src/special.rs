//! Orthogonal polynomials and terminating hypergeometric series.

use crate::error::{Error, Result};
use crate::scalar::{from_u32, lit, Real};

/// Jacobi polynomial `P_n^{(p,q)}(x)` by the three-term recurrence.
pub fn jacobi_p<T: Real>(n: u32, p: T, q: T, x: T) -> T {
    let one = T::one();
    let two: T = lit(2.0);
    let mut prev = one;
    if n == 0 {
        return prev;
    }
    let mut cur = (p - q) / two + (p + q + two) * x / two;
    for k in 2..=n {
        let k: T = from_u32(k);
        let s = two * k + p + q;
        let a = two * k * (k + p + q) * (s - two);
        let b = (s - one) * (s * (s - two) * x + p * p - q * q);
        let c = two * (k + p - one) * (k + q - one) * s;
        let next = (b * cur - c * prev) / a;
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre polynomial `L_n^{(α)}(x)`.
pub fn laguerre<T: Real>(n: u32, alpha: T, x: T) -> T {
    let one = T::one();
    let mut prev = one;
    if n == 0 {
        return prev;
    }
    let mut cur = one + alpha - x;
    for k in 1..n {
        let k: T = from_u32(k);
        let next = ((lit::<T>(2.0) * k + one + alpha - x) * cur - (k + alpha) * prev) / (k + one);
        prev = cur;
        cur = next;
    }
    cur
}

fn check_lower<T: Real>(n: u32, c: T) -> Result<()> {
    for j in 0..n {
        if c + from_u32::<T>(j) == T::zero() {
            return Err(Error::InvalidParameter(format!(
                "lower hypergeometric parameter {c} hits a pole within {n} terms"
            )));
        }
    }
    Ok(())
}

/// `₂F₁(−n, b; c; z)` as its finite sum of `n + 1` terms.
pub fn hyp2f1_terminating<T: Real>(n: u32, b: T, c: T, z: T) -> Result<T> {
    check_lower(n, c)?;
    let mut term = T::one();
    let mut sum = T::one();
    let minus_n = -from_u32::<T>(n);
    for k in 0..n {
        let k: T = from_u32(k);
        term = term * (minus_n + k) * (b + k) / ((c + k) * (k + T::one())) * z;
        sum = sum + term;
    }
    Ok(sum)
}

/// `₃F₂(−n, a2, a3; b1, b2; z)` as a finite sum.
pub fn hyp3f2_terminating<T: Real>(n: u32, a2: T, a3: T, b1: T, b2: T, z: T) -> Result<T> {
    check_lower(n, b1)?;
    check_lower(n, b2)?;
    let mut term = T::one();
    let mut sum = T::one();
    let minus_n = -from_u32::<T>(n);
    for k in 0..n {
        let k: T = from_u32(k);
        term = term * (minus_n + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + T::one())) * z;
        sum = sum + term;
    }
    Ok(sum)
}

/// Pochhammer symbol `(a)_n`.
pub fn pochhammer<T: Real>(a: T, n: u32) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (a + from_u32(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi_p(0, 1.3, 0.2, 0.7), 1.0);
        assert_eq!(jacobi_p(1, 2.0, 3.0, 0.0), -0.5);
        // Legendre P2 at p = q = 0
        let x = 0.37_f64;
        assert!((jacobi_p(2, 0.0, 0.0, x) - 0.5 * (3.0 * x * x - 1.0)).abs() < 1e-15);
    }

    /// Explicit sum `P_n^{(p,q)}(x) = Σ_s C(n+p, n−s) C(n+q, s) ((x−1)/2)^s ((x+1)/2)^{n−s}`
    /// with generalized binomials.
    fn jacobi_explicit(n: u32, p: f64, q: f64, x: f64) -> f64 {
        let binom = |top: f64, k: u32| (0..k).fold(1.0, |acc, j| acc * (top - j as f64) / (j as f64 + 1.0));
        (0..=n)
            .map(|s| {
                binom(n as f64 + p, n - s)
                    * binom(n as f64 + q, s)
                    * ((x - 1.0) / 2.0).powi(s as i32)
                    * ((x + 1.0) / 2.0).powi((n - s) as i32)
            })
            .sum()
    }

    #[test]
    fn jacobi_p3_cross_representation() {
        let (p, q, x) = (1.5_f64, 2.5, 0.3);
        let via_f = pochhammer(p + 1.0, 3) / 6.0 * hyp2f1_terminating(3, 3.0 + p + q + 1.0, p + 1.0, (1.0 - x) / 2.0).unwrap();
        let rec = jacobi_p(3, p, q, x);
        assert!((rec - via_f).abs() < 1e-12 * rec.abs().max(1.0));
        assert!((rec - jacobi_explicit(3, p, q, x)).abs() < 1e-12 * rec.abs().max(1.0));
    }

    #[test]
    fn hyp2f1_edges() {
        assert_eq!(hyp2f1_terminating(0, 3.3, 1.1, 0.8).unwrap(), 1.0);
        assert_eq!(hyp2f1_terminating(4, 3.3, 1.1, 0.0).unwrap(), 1.0);
        let (b, c, z) = (1.7_f64, 2.9, 0.45);
        let want = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!((hyp2f1_terminating(2, b, c, z).unwrap() - want).abs() < 1e-15);
        assert!(hyp2f1_terminating(3, 1.0, -1.0, 0.5).is_err());
        assert!(hyp2f1_terminating(3, 1.0, 0.0, 0.5).is_err());
    }

    #[test]
    fn laguerre_closed_forms() {
        let (a, x) = (2.3_f64, 1.7);
        assert_eq!(laguerre(0, a, x), 1.0);
        assert!((laguerre(1, a, x) - (1.0 + a - x)).abs() < 1e-15);
        let l2 = 0.5 * (x * x - 2.0 * (a + 2.0) * x + (a + 1.0) * (a + 2.0));
        assert!((laguerre(2, a, x) - l2).abs() < 1e-14);
        // L_n^α(x) = (α+1)_n/n! ₁F₁(−n; α+1; x): check against the series
        let n = 5;
        let series: f64 = (0..=n)
            .map(|k| {
                let binom = (0..(n - k)).fold(1.0, |acc, j| acc * (n as f64 + a - j as f64) / (j as f64 + 1.0));
                let fact = (1..=k).fold(1.0, |acc, j| acc * j as f64);
                (-1f64).powi(k as i32) * binom * x.powi(k as i32) / fact
            })
            .sum();
        assert!((laguerre(n, a, x) - series).abs() < 1e-12);
    }

    #[test]
    fn hyp3f2_reduces() {
        // with a3 = b2 the ₃F₂ collapses to ₂F₁
        let a = hyp3f2_terminating(4, 1.3_f64, 2.2, 3.1, 2.2, 0.7).unwrap();
        let b = hyp2f1_terminating(4, 1.3, 3.1, 0.7).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn jacobi_matches_hypergeometric(n in 0u32..=10, p in 0.0f64..40.0, q in 0.0f64..400.0, x in -1.0f64..1.0) {
            let rec = jacobi_p(n, p, q, x);
            let via_f = pochhammer(p + 1.0, n) / pochhammer(1.0, n)
                * hyp2f1_terminating(n, n as f64 + p + q + 1.0, p + 1.0, (1.0 - x) / 2.0).unwrap();
            // the alternating series loses digits to cancellation; scale by its largest term
            let z = (1.0 - x) / 2.0;
            let b = n as f64 + p + q + 1.0;
            let mut term = pochhammer(p + 1.0, n) / pochhammer(1.0, n);
            let mut big = term.abs();
            for k in 0..n {
                let k = k as f64;
                term *= (k - n as f64) * (b + k) / ((p + 1.0 + k) * (k + 1.0)) * z;
                big = big.max(term.abs());
            }
            prop_assert!((rec - via_f).abs() <= 1e-12 * big.max(1.0), "{rec} vs {via_f}");
        }
    }
}

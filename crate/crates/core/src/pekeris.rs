//! Pekeris expansion of the centrifugal barrier around `r = re`:
//! `re²/r² ≈ D0 + D1 e^{−νx} + D2 e^{−2νx}`, `x = (r − re)/re`.

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::units::{l_factor, MoleculeParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PekerisCoeffs<T> {
    pub d0: T,
    pub d1: T,
    pub d2: T,
    pub nu: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentrifugalMode {
    Pekeris,
    Exact,
}

impl std::str::FromStr for CentrifugalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pekeris" => Ok(Self::Pekeris),
            "exact" => Ok(Self::Exact),
            _ => Err(Error::InvalidParameter(format!("centrifugal mode must be `pekeris` or `exact`, got `{s}`"))),
        }
    }
}

/// `D0 = 1 − 3/ν + 3/ν²`, `D1 = 4/ν − 6/ν²`, `D2 = −1/ν + 3/ν²`.
///
/// Exact for rational `T`.
pub fn pekeris_coeffs<T: Num + Copy + PartialOrd>(nu: T) -> Result<PekerisCoeffs<T>> {
    if !(nu > T::zero()) {
        return Err(Error::Domain("Pekeris width nu must be positive".into()));
    }
    let one = T::one();
    let two = one + one;
    let three = two + one;
    let four = two + two;
    let six = three + three;
    let inv = one / nu;
    let inv2 = inv * inv;
    Ok(PekerisCoeffs {
        d0: one - three * inv + three * inv2,
        d1: four * inv - six * inv2,
        d2: three * inv2 - inv,
        nu,
    })
}

impl<T: Real> PekerisCoeffs<T> {
    /// `D0 + D1 y + D2 y²`.
    pub fn profile(&self, y: T) -> T {
        self.d0 + (self.d1 + self.d2 * y) * y
    }
}

/// Centrifugal energy at `r` (eV), either the Pekeris form or `E0 l(l+1) (re/r)²`.
pub fn rotational_potential_at<T: Real>(
    c: &PekerisCoeffs<T>,
    l: u32,
    p: &MoleculeParams<T>,
    r: T,
    mode: CentrifugalMode,
) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::Domain(format!("radius must be positive, got {r}")));
    }
    let b0 = p.e0 * l_factor::<T>(l);
    Ok(match mode {
        CentrifugalMode::Pekeris => b0 * c.profile((-p.b() * (r - p.re)).exp()),
        CentrifugalMode::Exact => {
            let s = p.re / r;
            b0 * s * s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::registry_lookup;
    use num_rational::Ratio;

    #[test]
    fn nu_three_is_exact() {
        let c = pekeris_coeffs(Ratio::from_integer(3i64)).unwrap();
        assert_eq!(c.d0, Ratio::new(1, 3));
        assert_eq!(c.d1, Ratio::new(2, 3));
        assert_eq!(c.d2, Ratio::from_integer(0));
    }

    #[test]
    fn large_nu_limit() {
        let c = pekeris_coeffs(1e9_f64).unwrap();
        assert!((c.d0 - 1.0).abs() < 1e-8 && c.d1.abs() < 1e-8 && c.d2.abs() < 1e-8);
    }

    #[test]
    fn h2_d0() {
        let c = pekeris_coeffs(1.440558_f64).unwrap();
        let nu = 1.440558_f64;
        assert!((c.d0 - (1.0 - 3.0 / nu + 3.0 / (nu * nu))).abs() < 1e-15);
        assert!((c.d0 - 0.3631123).abs() < 1e-7, "{}", c.d0);
    }

    #[test]
    fn rejects_nonpositive_nu() {
        assert!(pekeris_coeffs(0.0_f64).is_err());
        assert!(pekeris_coeffs(-2.0_f64).is_err());
    }

    #[test]
    fn modes_agree_at_equilibrium() {
        let p = registry_lookup("LiH").unwrap();
        let c = pekeris_coeffs(p.nu).unwrap();
        for l in [0, 1, 5, 10] {
            let a = rotational_potential_at(&c, l, &p, p.re, CentrifugalMode::Pekeris).unwrap();
            let b = rotational_potential_at(&c, l, &p, p.re, CentrifugalMode::Exact).unwrap();
            assert!((a - b).abs() <= 1e-14 * b.abs().max(1e-300));
        }
        assert_eq!(rotational_potential_at(&c, 0, &p, 2.0, CentrifugalMode::Exact).unwrap(), 0.0);
        assert!(rotational_potential_at(&c, 1, &p, 0.0, CentrifugalMode::Exact).is_err());
    }

    #[test]
    fn modes_differ_away_from_equilibrium() {
        let p = registry_lookup("H2").unwrap();
        let c = pekeris_coeffs(p.nu).unwrap();
        let r = 2.0 * p.re;
        let a = rotational_potential_at(&c, 5, &p, r, CentrifugalMode::Pekeris).unwrap();
        let b = rotational_potential_at(&c, 5, &p, r, CentrifugalMode::Exact).unwrap();
        assert!(a > 0.0 && b > 0.0 && (a - b).abs() > 1e-4);
    }

    #[test]
    fn derivatives_match_at_equilibrium() {
        // in x = (r − re)/re: (1+x)^-2 against D0 + D1 e^{-νx} + D2 e^{-2νx}
        let nu = 2.38057_f64;
        let c = pekeris_coeffs(nu).unwrap();
        let pek = |x: f64| c.profile((-nu * x).exp());
        let exact = |x: f64| (1.0 + x).powi(-2);
        let h = 1e-4;
        let d1 = |f: &dyn Fn(f64) -> f64| (f(h) - f(-h)) / (2.0 * h);
        let d2 = |f: &dyn Fn(f64) -> f64| (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
        assert!((d1(&pek) - d1(&exact)).abs() < 1e-6 * 2.0);
        assert!((d2(&pek) - d2(&exact)).abs() < 1e-6 * 6.0 * 10.0);
    }
}

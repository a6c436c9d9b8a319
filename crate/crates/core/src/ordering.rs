//! von Roos ordering ambiguity and the mass profile `m(r) = m0 (1 − ε e^{−b(r−re)})^{−2}`.
//!
//! For this profile the ordering potential plus the correction produced by
//! `ψ = √m φ` is exactly `c1·y + c2·y²` with `y = e^{−b(r−re)}`:
//!
//! ```text
//! c1 = −A0 ε (α+γ+1)/(a+1)
//! c2 = +A0 ε² (1+2α+2γ+4αγ−a)/(a+1)
//! ```
//!
//! The ordering potential alone contributes `(α+γ−a)/(a+1)` to the linear
//! coefficient; the remaining `+1` comes from the transformation term.

use std::fmt;
use std::str::FromStr;

use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::units::{MoleculeParams, CONSTANTS};

/// Ambiguity parameters `(a, α, γ)`; `β = −1 − α − γ` is implied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderingScheme<T> {
    a: T,
    alpha: T,
    gamma: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Weyl,
    LiKuhn,
    BenDanielDuke,
    ZhuKroemer,
    GoraWilliams,
}

impl Preset {
    pub const ALL: [Preset; 5] =
        [Preset::Weyl, Preset::LiKuhn, Preset::BenDanielDuke, Preset::ZhuKroemer, Preset::GoraWilliams];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Weyl => "weyl",
            Preset::LiKuhn => "li-kuhn",
            Preset::BenDanielDuke => "bendaniel-duke",
            Preset::ZhuKroemer => "zhu-kroemer",
            Preset::GoraWilliams => "gora-williams",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::UnknownOrdering { name: s.to_owned() })
    }
}

impl<T: Num + Copy> OrderingScheme<T> {
    pub fn new(a: T, alpha: T, gamma: T) -> Result<Self> {
        if a + T::one() == T::zero() {
            return Err(Error::InvalidParameter("ordering parameter a must differ from -1".into()));
        }
        Ok(Self { a, alpha, gamma })
    }

    pub fn preset(p: Preset) -> Self {
        let (z, one) = (T::zero(), T::one());
        let half = one / (one + one);
        let (a, alpha, gamma) = match p {
            Preset::Weyl => (one, z, z),
            Preset::LiKuhn => (z, z, z - half),
            Preset::BenDanielDuke => (z, z, z),
            Preset::ZhuKroemer => (z, z - half, z - half),
            // a + γ = 0, α = −1 family; a = γ = 0 is the representative
            Preset::GoraWilliams => (z, z - one, z),
        };
        Self { a, alpha, gamma }
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn beta(&self) -> T {
        T::zero() - T::one() - self.alpha - self.gamma
    }

    /// Total linear coefficient `(α+γ+1)/(a+1)`, in units of `−A0·ε`.
    /// Includes the ordering-independent `+1` from the `ψ = √m φ` correction.
    pub fn lin_coeff(&self) -> T {
        (self.alpha + self.gamma + T::one()) / (self.a + T::one())
    }

    /// Total quadratic coefficient `(1+2α+2γ+4αγ−a)/(a+1)`, in units of `+A0·ε²`.
    pub fn quad_coeff(&self) -> T {
        let two = T::one() + T::one();
        let four = two + two;
        (T::one() + two * self.alpha + two * self.gamma + four * self.alpha * self.gamma - self.a) / (self.a + T::one())
    }

    /// `(α+γ−a)/(a+1)`: the linear coefficient of the ordering potential alone.
    pub fn ordering_only_lin_coeff(&self) -> T {
        (self.alpha + self.gamma - self.a) / (self.a + T::one())
    }

    /// The scheme with α and γ exchanged.
    pub fn swapped(&self) -> Self {
        Self { a: self.a, alpha: self.gamma, gamma: self.alpha }
    }
}

/// Case-insensitive preset lookup.
pub fn preset<T: Num + Copy>(name: &str) -> Result<OrderingScheme<T>> {
    Ok(OrderingScheme::preset(name.parse()?))
}

impl FromStr for OrderingScheme<f64> {
    type Err = Error;

    /// A preset name, or an explicit `a,alpha,gamma` triple.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            let parts: Vec<&str> = s.split(',').map(str::trim).collect();
            let nums: std::result::Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
            match nums {
                Ok(v) if v.len() == 3 => OrderingScheme::new(v[0], v[1], v[2]),
                _ => Err(Error::UnknownOrdering { name: s.to_owned() }),
            }
        } else {
            preset(s)
        }
    }
}

impl<T: fmt::Display + Num + Copy> fmt::Display for OrderingScheme<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.alpha, self.gamma)
    }
}

/// `m(r) = m0 (1 − ε e^{−b(r−re)})^{−2}` with `0 ≤ ε < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProfile<T> {
    /// Rest energy of the asymptotic mass (eV).
    pub m0: T,
    pub epsilon: T,
    pub b: T,
    pub re: T,
}

impl<T: Real> MassProfile<T> {
    pub fn new(m0: T, epsilon: T, b: T, re: T) -> Result<Self> {
        check_epsilon(epsilon)?;
        if !(m0 > T::zero() && b > T::zero() && re > T::zero()) {
            return Err(Error::InvalidParameter("m0, b and re must be positive".into()));
        }
        Ok(Self { m0, epsilon, b, re })
    }

    /// Profile for a molecule; `m0` is taken consistent with the tabulated `E0`.
    pub fn for_molecule(p: &MoleculeParams<T>, epsilon: T) -> Result<Self> {
        Self::new(p.m0_ev(), epsilon, p.b(), p.re)
    }

    pub fn y(&self, r: T) -> T {
        (-self.b * (r - self.re)).exp()
    }

    /// `ħ²b²/(2 m0)`.
    pub fn a0(&self) -> T {
        let hc: T = lit(CONSTANTS.hbar_c);
        hc * hc * self.b * self.b / (lit::<T>(2.0) * self.m0)
    }

    /// Radius where `ε e^{−b(r−re)} = 1`, if any.
    pub fn singular_radius(&self) -> Option<T> {
        (self.epsilon > T::zero()).then(|| self.re + self.epsilon.ln() / self.b)
    }

    fn denom(&self, r: T) -> Result<(T, T)> {
        let y = self.y(r);
        let w = T::one() - self.epsilon * y;
        if w <= T::zero() || !w.is_finite() {
            return Err(Error::SingularMass { r: r.to_f64().unwrap_or(f64::NAN) });
        }
        Ok((y, w))
    }

    /// `m(r)` in eV.
    pub fn mass_at(&self, r: T) -> Result<T> {
        let (_, w) = self.denom(r)?;
        Ok(self.m0 / (w * w))
    }

    /// `m(r)/m0`.
    pub fn mass_ratio_at(&self, r: T) -> Result<T> {
        let (_, w) = self.denom(r)?;
        Ok(T::one() / (w * w))
    }

    /// `(m, m', m'')` from the analytic derivatives of the profile.
    pub fn mass_derivatives(&self, r: T) -> Result<(T, T, T)> {
        let (y, w) = self.denom(r)?;
        let (e, b, m0) = (self.epsilon, self.b, self.m0);
        let two: T = lit(2.0);
        let six: T = lit(6.0);
        let w3 = w * w * w;
        let m = m0 / (w * w);
        let dm = -two * m0 * e * b * y / w3;
        let d2m = two * m0 * e * b * b * y / w3 + six * m0 * e * e * b * b * y * y / (w3 * w);
        Ok((m, dm, d2m))
    }
}

pub(crate) fn check_epsilon<T: Real>(epsilon: T) -> Result<()> {
    if epsilon >= T::zero() && epsilon < T::one() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("mass coupling epsilon must lie in [0, 1), got {epsilon}")))
    }
}

pub fn mass_at<T: Real>(p: &MassProfile<T>, r: T) -> Result<T> {
    p.mass_at(r)
}

/// `U(r) = −ħ²/(4m³(a+1)) [(α+γ−a) m m'' + 2(a−α−γ−αγ) m'²]`.
pub fn ordering_potential_at<T: Real>(s: &OrderingScheme<T>, p: &MassProfile<T>, r: T) -> Result<T> {
    let (m, dm, d2m) = p.mass_derivatives(r)?;
    let hc: T = lit(CONSTANTS.hbar_c);
    let two: T = lit(2.0);
    let four: T = lit(4.0);
    let (a, al, ga) = (s.a, s.alpha, s.gamma);
    let bracket = (al + ga - a) * m * d2m + two * (a - al - ga - al * ga) * dm * dm;
    Ok(-hc * hc / (four * m * m * m * (a + T::one())) * bracket)
}

/// `(ħ²/4m) [(3/2)(m'/m)² − m''/m]`, the term produced by `ψ = √m φ`.
pub fn pct_term_at<T: Real>(p: &MassProfile<T>, r: T) -> Result<T> {
    let (m, dm, d2m) = p.mass_derivatives(r)?;
    let hc: T = lit(CONSTANTS.hbar_c);
    let g = dm / m;
    Ok(hc * hc / (lit::<T>(4.0) * m) * (lit::<T>(1.5) * g * g - d2m / m))
}

/// Coefficients `(c1, c2)` with `U + PCT = c1·y + c2·y²` exactly.
pub fn extra_potential_poly<T: Real>(s: &OrderingScheme<T>, p: &MassProfile<T>) -> (T, T) {
    let a0 = p.a0();
    let e = p.epsilon;
    (-a0 * e * s.lin_coeff(), a0 * e * e * s.quad_coeff())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::registry_lookup;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn q(n: i64, d: i64) -> Q {
        Ratio::new(n, d)
    }

    #[test]
    fn presets() {
        let w: OrderingScheme<Q> = preset("weyl").unwrap();
        assert_eq!((w.a(), w.alpha(), w.gamma()), (q(1, 1), q(0, 1), q(0, 1)));
        let lk: OrderingScheme<Q> = preset("Li-Kuhn").unwrap();
        assert_eq!((lk.a(), lk.alpha(), lk.gamma()), (q(0, 1), q(0, 1), q(-1, 2)));
        let zk: OrderingScheme<Q> = preset("ZHU-KROEMER").unwrap();
        assert_eq!((zk.a(), zk.alpha(), zk.gamma()), (q(0, 1), q(-1, 2), q(-1, 2)));
        let gw: OrderingScheme<Q> = preset("gora-williams").unwrap();
        assert_eq!(gw.a() + gw.gamma(), q(0, 1));
        assert_eq!(gw.alpha(), q(-1, 1));
        assert!(matches!(preset::<f64>("bogus"), Err(Error::UnknownOrdering { .. })));
    }

    #[test]
    fn coefficients_exact() {
        let c = |n: &str| {
            let s: OrderingScheme<Q> = preset(n).unwrap();
            (s.lin_coeff(), s.quad_coeff())
        };
        assert_eq!(c("weyl"), (q(1, 2), q(0, 1)));
        assert_eq!(c("li-kuhn"), (q(1, 2), q(0, 1)));
        assert_eq!(c("bendaniel-duke"), (q(1, 1), q(1, 1)));
        assert_eq!(c("zhu-kroemer"), (q(0, 1), q(0, 1)));
    }

    #[test]
    fn beta_is_implied() {
        let s: OrderingScheme<Q> = preset("zhu-kroemer").unwrap();
        assert_eq!(s.beta(), q(0, 1));
        let s: OrderingScheme<Q> = preset("gora-williams").unwrap();
        assert_eq!(s.alpha() + s.beta() + s.gamma(), q(-1, 1));
    }

    #[test]
    fn rejects_a_minus_one() {
        assert!(OrderingScheme::new(-1.0, 0.0, 0.0).is_err());
        assert!(OrderingScheme::new(q(-1, 1), q(0, 1), q(0, 1)).is_err());
    }

    #[test]
    fn parse_triple() {
        let s: OrderingScheme<f64> = "1, 0, 0".parse().unwrap();
        assert_eq!(s, OrderingScheme::preset(Preset::Weyl));
        assert!("1,2".parse::<OrderingScheme<f64>>().is_err());
        assert!("-1,0,0".parse::<OrderingScheme<f64>>().is_err());
    }

    fn h2_profile(eps: f64) -> MassProfile<f64> {
        MassProfile::for_molecule(&registry_lookup("H2").unwrap(), eps).unwrap()
    }

    #[test]
    fn mass_profile_values() {
        let p = h2_profile(0.0);
        assert_eq!(p.mass_at(0.3).unwrap(), p.m0);
        let p = h2_profile(0.5);
        assert!((p.mass_at(p.re).unwrap() - 4.0 * p.m0).abs() < 1e-9 * p.m0);
        assert!((p.mass_at(200.0).unwrap() - p.m0).abs() < 1e-12 * p.m0);
        assert!(MassProfile::new(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(MassProfile::new(1.0, -0.1, 1.0, 1.0).is_err());
    }

    #[test]
    fn singular_mass_is_reported() {
        let p = h2_profile(0.5);
        let rs = p.singular_radius().unwrap();
        assert!(rs < p.re);
        assert!(matches!(p.mass_at(rs - 0.01), Err(Error::SingularMass { .. })));
        assert!(ordering_potential_at(&OrderingScheme::preset(Preset::Weyl), &p, rs - 0.01).is_err());
        assert!(h2_profile(0.0).singular_radius().is_none());
    }

    #[test]
    fn a0_matches_molecule_scale() {
        let m = registry_lookup("H2").unwrap();
        let p = h2_profile(0.3);
        assert!((p.a0() - m.a0()).abs() < 1e-14 * m.a0());
    }

    #[test]
    fn pct_closed_form() {
        let p = h2_profile(0.2);
        let v = pct_term_at(&p, p.re).unwrap();
        assert!((v + 0.16 * p.a0()).abs() < 1e-12 * p.a0());
        assert_eq!(pct_term_at(&h2_profile(0.0), 0.9).unwrap(), 0.0);
        assert!(pct_term_at(&p, 500.0).unwrap().abs() < 1e-100);
    }

    #[test]
    fn ordering_potential_vanishes() {
        let p = h2_profile(0.0);
        let w = OrderingScheme::preset(Preset::Weyl);
        assert_eq!(ordering_potential_at(&w, &p, 0.8).unwrap(), 0.0);
        // α = 0, a = γ removes the ordering potential
        let free = OrderingScheme::new(0.7, 0.0, 0.7).unwrap();
        let p = h2_profile(0.4);
        for r in [0.5, 0.74, 1.0, 3.0] {
            assert!(ordering_potential_at(&free, &p, r).unwrap().abs() < 1e-12 * p.a0());
        }
    }

    #[test]
    fn weyl_poly_at_equilibrium() {
        let p = h2_profile(0.3);
        let w = OrderingScheme::preset(Preset::Weyl);
        let direct = ordering_potential_at(&w, &p, p.re).unwrap() + pct_term_at(&p, p.re).unwrap();
        let (c1, c2) = extra_potential_poly(&w, &p);
        assert!((c1 + p.a0() * 0.15).abs() < 1e-15);
        assert_eq!(c2, 0.0);
        assert!((direct - (c1 + c2)).abs() < 1e-12 * p.a0());
        let zk = OrderingScheme::preset(Preset::ZhuKroemer);
        assert_eq!(extra_potential_poly(&zk, &p), (0.0, 0.0));
        assert_eq!(extra_potential_poly(&w, &h2_profile(0.0)), (-0.0, 0.0));
    }
}

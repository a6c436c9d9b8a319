//! Closed-form bound-state energies.
//!
//! With `z = e^{−b(r−re)}` the radial equation (Pekeris centrifugal term,
//! mass profile `m0 (1 − εz)^{−2}`) becomes hypergeometric with
//!
//! ```text
//! γ1 = De/A0 + l(l+1) D2/ν² + k·q ε²
//! γ2 = 2De/A0 − l(l+1) D1/ν² + k·p ε
//! ε_nl² = −E/A0 + l(l+1) D0/ν²
//! ```
//!
//! where `p`/`q` are the ordering coefficients ([`OrderingScheme::lin_coeff`],
//! [`OrderingScheme::quad_coeff`]) and `k` is the coupling scale of the
//! [`CouplingConvention`]. The quantization condition is
//!
//! ```text
//! ε_nl = [n(n+1)ε − (2n+1)√γ1 + γ2] / [2√γ1 − (2n+1)ε]
//! ```
//!
//! and `E = B0 D0 − A0 ε_nl²`. In the older `Q1, Q2` notation,
//! `Q1 = A0 γ2/2` and `Q2² = A0 γ1`; only the γ route is implemented.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordering::{check_epsilon, OrderingScheme};
use crate::pekeris::{pekeris_coeffs, PekerisCoeffs};
use crate::scalar::{from_u32, lit, Real};
use crate::units::{l_factor, MoleculeParams};

/// Smallest admissible `|2√γ1 − (2n+1)ε|`.
pub const DENOMINATOR_GUARD: f64 = 1e-12;

/// How the mass-coupling terms enter γ1 and γ2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CouplingConvention {
    /// `γ2 += p ε`, `γ1 += q ε²` (dimensionless; the actual mass-profile equation).
    #[default]
    Physical,
    /// `γ2 += re² p ε`, `γ1 += re² q ε²` with `re` in Å, which is how the
    /// printed rotating-PDM reference tables were generated.
    Tabulated,
}

impl std::str::FromStr for CouplingConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "physical" => Ok(Self::Physical),
            "tabulated" => Ok(Self::Tabulated),
            _ => Err(Error::InvalidParameter(format!("convention must be `physical` or `tabulated`, got `{s}`"))),
        }
    }
}

impl CouplingConvention {
    pub fn scale<T: Real>(self, molecule: &MoleculeParams<T>) -> T {
        match self {
            Self::Physical => T::one(),
            Self::Tabulated => molecule.re * molecule.re,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumInputs<T> {
    pub molecule: MoleculeParams<T>,
    pub scheme: OrderingScheme<T>,
    pub epsilon: T,
    pub l: u32,
    pub convention: CouplingConvention,
}

impl<T: Real> SpectrumInputs<T> {
    pub fn new(molecule: MoleculeParams<T>, scheme: OrderingScheme<T>, epsilon: T, l: u32) -> Result<Self> {
        check_epsilon(epsilon)?;
        Ok(Self { molecule, scheme, epsilon, l, convention: CouplingConvention::Physical })
    }

    pub fn with_convention(mut self, convention: CouplingConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn with_l(&self, l: u32) -> Self {
        Self { l, ..self.clone() }
    }

    pub fn with_epsilon(&self, epsilon: T) -> Self {
        Self { epsilon, ..self.clone() }
    }

    pub fn pekeris(&self) -> PekerisCoeffs<T> {
        pekeris_coeffs(self.molecule.nu).expect("molecule nu is positive")
    }

    /// `V1 = De`.
    pub fn v1(&self) -> T {
        self.molecule.de
    }

    /// `V2 = 2 De`.
    pub fn v2(&self) -> T {
        lit::<T>(2.0) * self.molecule.de
    }

    fn rot_over_nu2(&self) -> T {
        l_factor::<T>(self.l) / (self.molecule.nu * self.molecule.nu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundClass {
    Bound,
    /// `ε_nl ≤ 0` but `B0 D0 − A0 ε_nl²` is still negative.
    Marginal,
    Unbound,
}

impl BoundClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Bound => "bound",
            Self::Marginal => "marginal",
            Self::Unbound => "unbound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel<T> {
    pub n: u32,
    pub l: u32,
    pub eps_nl: T,
    /// Energy in eV.
    pub energy: T,
    pub bound_class: BoundClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NmaxConvention {
    /// Largest `n` with `ε_nl > 0`.
    #[default]
    Strict,
    /// Strict count plus one when the next level still has negative energy.
    Table,
}

pub fn gamma1<T: Real>(inp: &SpectrumInputs<T>) -> Result<T> {
    let m = &inp.molecule;
    let k = inp.convention.scale(m);
    let g1 = inp.v1() / m.a0() + inp.rot_over_nu2() * inp.pekeris().d2 + k * inp.scheme.quad_coeff() * inp.epsilon * inp.epsilon;
    if g1 > T::zero() {
        Ok(g1)
    } else {
        Err(Error::NoSpectrum { gamma1: g1.to_f64().unwrap_or(f64::NAN) })
    }
}

pub fn gamma2<T: Real>(inp: &SpectrumInputs<T>) -> T {
    let m = &inp.molecule;
    let k = inp.convention.scale(m);
    inp.v2() / m.a0() - inp.rot_over_nu2() * inp.pekeris().d1 + k * inp.scheme.lin_coeff() * inp.epsilon
}

fn eps_parts<T: Real>(inp: &SpectrumInputs<T>, n: u32) -> Result<(T, T)> {
    let s = gamma1(inp)?.sqrt();
    let g2 = gamma2(inp);
    let e = inp.epsilon;
    let nf: T = from_u32(n);
    let two_n1 = lit::<T>(2.0) * nf + T::one();
    let denom = lit::<T>(2.0) * s - two_n1 * e;
    if denom.abs() < lit(DENOMINATOR_GUARD) {
        return Err(Error::DegenerateDenominator { n });
    }
    Ok(((nf * (nf + T::one()) * e - two_n1 * s + g2) / denom, denom))
}

/// The spectral variable `ε_nl` for vibrational level `n`.
pub fn eps_nl<T: Real>(inp: &SpectrumInputs<T>, n: u32) -> Result<T> {
    eps_parts(inp, n).map(|(e, _)| e)
}

pub fn energy<T: Real>(inp: &SpectrumInputs<T>, n: u32) -> Result<EnergyLevel<T>> {
    let (eps, denom) = eps_parts(inp, n)?;
    let m = &inp.molecule;
    let e = m.b0(inp.l) * inp.pekeris().d0 - m.a0() * eps * eps;
    let bound_class = if eps > T::zero() && denom > T::zero() {
        BoundClass::Bound
    } else if e < T::zero() {
        BoundClass::Marginal
    } else {
        BoundClass::Unbound
    };
    Ok(EnergyLevel { n, l: inp.l, eps_nl: eps, energy: e, bound_class })
}

/// The `l = 0` spectrum; identical to [`energy`] there.
pub fn swave_energy<T: Real>(inp: &SpectrumInputs<T>, n: u32) -> Result<EnergyLevel<T>> {
    if inp.l != 0 {
        return Err(Error::InvalidParameter(format!("s-wave energy requires l = 0, got l = {}", inp.l)));
    }
    energy(inp, n)
}

/// Highest vibrational quantum number of a bound level.
pub fn n_max<T: Real>(inp: &SpectrumInputs<T>, convention: NmaxConvention) -> Result<u32> {
    let first = energy(inp, 0)?;
    if first.bound_class != BoundClass::Bound {
        return Err(Error::NoBoundStates { eps0: first.eps_nl.to_f64().unwrap_or(f64::NAN) });
    }
    let mut strict = 0;
    loop {
        match energy(inp, strict + 1) {
            Ok(level) if level.bound_class == BoundClass::Bound => strict += 1,
            _ => break,
        }
    }
    Ok(match convention {
        NmaxConvention::Strict => strict,
        NmaxConvention::Table => match energy(inp, strict + 1) {
            Ok(next) if next.energy < T::zero() => strict + 1,
            _ => strict,
        },
    })
}

/// All levels `0..=n_max` (strict) for the given inputs.
pub fn bound_levels<T: Real>(inp: &SpectrumInputs<T>) -> Result<Vec<EnergyLevel<T>>> {
    let top = n_max(inp, NmaxConvention::Strict)?;
    (0..=top).map(|n| energy(inp, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::Preset;
    use crate::units::registry_lookup;

    fn inputs(name: &str, preset: Preset, eps: f64, l: u32) -> SpectrumInputs<f64> {
        SpectrumInputs::new(registry_lookup(name).unwrap(), OrderingScheme::preset(preset), eps, l).unwrap()
    }

    #[test]
    fn gammas_constant_mass() {
        let h2 = inputs("H2", Preset::Weyl, 0.0, 0);
        let a0 = h2.molecule.a0();
        assert!((gamma1(&h2).unwrap() - 4.7446 / a0).abs() < 1e-12);
        assert!((gamma1(&h2).unwrap() - 303.16).abs() < 0.01);
        assert!((gamma2(&h2) - 606.31).abs() < 0.01);
    }

    #[test]
    fn gammas_ordering_terms() {
        let base = gamma1(&inputs("H2", Preset::Weyl, 0.0, 0)).unwrap();
        assert_eq!(gamma1(&inputs("H2", Preset::Weyl, 0.7, 0)).unwrap(), base);
        let bd = gamma1(&inputs("H2", Preset::BenDanielDuke, 0.5, 0)).unwrap();
        assert!((bd - (base + 0.25)).abs() < 1e-12);
        let g2 = gamma2(&inputs("H2", Preset::Weyl, 0.4, 0)) - gamma2(&inputs("H2", Preset::Weyl, 0.0, 0));
        assert!((g2 - 0.2).abs() < 1e-12);
        let h2 = inputs("H2", Preset::Weyl, 0.0, 0);
        let d1 = h2.pekeris().d1;
        let dl = gamma2(&h2.with_l(1)) - gamma2(&h2);
        assert!((dl + 2.0 * d1 / (h2.molecule.nu * h2.molecule.nu)).abs() < 1e-12);
    }

    #[test]
    fn tabulated_scale() {
        let h2 = inputs("H2", Preset::Weyl, 0.4, 0).with_convention(CouplingConvention::Tabulated);
        let base = gamma2(&inputs("H2", Preset::Weyl, 0.0, 0));
        assert!((gamma2(&h2) - base - 0.2 * 0.7416 * 0.7416).abs() < 1e-12);
    }

    #[test]
    fn eps_constant_mass() {
        let h2 = inputs("H2", Preset::Weyl, 0.0, 0);
        let g1 = gamma1(&h2).unwrap();
        assert!((eps_nl(&h2, 0).unwrap() - (g1.sqrt() - 0.5)).abs() < 1e-12);
        assert!((eps_nl(&h2, 0).unwrap() - 16.911).abs() < 1e-3);
        for n in 0..20 {
            let want = gamma2(&h2) / (2.0 * g1.sqrt()) - n as f64 - 0.5;
            assert!((eps_nl(&h2, n).unwrap() - want).abs() < 1e-12);
        }
        assert!((eps_nl(&h2, 17).unwrap() + 0.089).abs() < 1e-3);
    }

    #[test]
    fn table_two_spot_values() {
        let e = |m: &str, n| energy(&inputs(m, Preset::Weyl, 0.0, 0), n).unwrap().energy;
        assert!((e("H2", 0) + 4.476013).abs() < 1e-6);
        assert!((e("HCl", 10) + 1.546520).abs() < 1e-6);
        assert!((e("LiH", 25) + 0.033949).abs() < 1e-6);
    }

    #[test]
    fn tabulated_pdm_spot_values() {
        let e = |m: &str, eps, l, n| {
            energy(&inputs(m, Preset::Weyl, eps, l).with_convention(CouplingConvention::Tabulated), n)
                .unwrap()
                .energy
        };
        assert!((e("H2", 0.1, 0, 0) + 4.50225).abs() < 5e-4);
        assert!((e("CO", 0.8, 10, 10) + 10.7329).abs() < 5e-4);
        assert!((e("LiH", 0.2, 5, 5) + 1.77179).abs() < 5e-4);
    }

    #[test]
    fn n_max_conventions() {
        let h2 = inputs("H2", Preset::Weyl, 0.0, 0);
        assert_eq!(n_max(&h2, NmaxConvention::Strict).unwrap(), 16);
        assert_eq!(n_max(&h2, NmaxConvention::Table).unwrap(), 17);
        let co = inputs("CO", Preset::Weyl, 0.0, 0);
        assert_eq!(n_max(&co, NmaxConvention::Strict).unwrap(), 82);
        assert_eq!(n_max(&co, NmaxConvention::Table).unwrap(), 83);
        assert_eq!(n_max(&inputs("LiH", Preset::Weyl, 0.0, 0), NmaxConvention::Strict).unwrap(), 28);
        assert_eq!(energy(&h2, 17).unwrap().bound_class, BoundClass::Marginal);
    }

    #[test]
    fn swave_requires_l_zero() {
        assert!(swave_energy(&inputs("H2", Preset::Weyl, 0.0, 1), 0).is_err());
        let hcl = inputs("HCl", Preset::Weyl, 0.0, 0);
        assert_eq!(swave_energy(&hcl, 3).unwrap(), energy(&hcl, 3).unwrap());
    }

    #[test]
    fn no_spectrum_for_negative_gamma1() {
        // large negative quadratic coefficient: a = 0, α = 1, γ = −3 gives q = −15
        let scheme = OrderingScheme::new(0.0, 1.0, -3.0).unwrap();
        let mut m = registry_lookup("H2").unwrap();
        m.de = 1e-4;
        let inp = SpectrumInputs::new(m, scheme, 0.9, 0).unwrap();
        assert!(matches!(gamma1(&inp), Err(Error::NoSpectrum { .. })));
    }

    #[test]
    fn degenerate_denominator() {
        let mut inp = inputs("H2", Preset::BenDanielDuke, 0.5, 0);
        // choose De so that 2√γ1 = (2n+1) ε for n = 3: √γ1 = 1.75 → γ1 = 3.0625 = De/A0 + 0.25
        inp.molecule.de = (3.0625 - 0.25) * inp.molecule.a0();
        assert!(matches!(eps_nl(&inp, 3), Err(Error::DegenerateDenominator { n: 3 })));
    }

    #[test]
    fn rejects_bad_epsilon() {
        let m = registry_lookup("H2").unwrap();
        assert!(SpectrumInputs::new(m.clone(), OrderingScheme::preset(Preset::Weyl), 1.0, 0).is_err());
        assert!(SpectrumInputs::new(m, OrderingScheme::preset(Preset::Weyl), -0.1, 0).is_err());
    }

    #[test]
    fn f32_spectrum() {
        let m: MoleculeParams<f32> = registry_lookup("H2").unwrap().cast();
        let inp = SpectrumInputs::new(m, OrderingScheme::preset(Preset::Weyl), 0.0f32, 0).unwrap();
        assert!((energy(&inp, 0).unwrap().energy + 4.476013).abs() < 1e-4);
    }
}

//! Reduced radial wave functions.
//!
//! With `z = e^{−b(r−re)}` and `w = 1 − εz`, the solution of the transformed
//! equation is `φ ∝ z^{ε_nl} w^{(1+S)/2} ₂F₁(−n, n+2ε_nl+S+1; 2ε_nl+1; εz)`,
//! and the physical function is `ψ = √m φ ∝ φ / w`. For `ε = 0` the Laguerre
//! form `x^{ε_nl} e^{−x/2} L_n^{(2ε_nl)}(x)`, `x = 2√γ1 z`, is used instead.
//!
//! Normalization is `∫|ψ|² dr = 1` on the sampled interval, computed by
//! refined Simpson quadrature of the analytic function.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::quad::{simpson_refined, simpson_samples};
use crate::scalar::{from_u32, lit, Real};
use crate::special::{hyp2f1_terminating, hyp3f2_terminating, laguerre};
use crate::spectrum::{energy, gamma1, gamma2, n_max, BoundClass, NmaxConvention, SpectrumInputs};
use crate::units::MoleculeParams;

/// Relative change at which quadrature refinement stops.
pub const NORM_REFINE_TOL: f64 = 1e-9;
pub const DEFAULT_GRID_POINTS: usize = 4001;

/// Parameters of one PDM eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveParams<T> {
    pub eps_nl: T,
    pub s: T,
    pub epsilon: T,
    pub b: T,
    pub re: T,
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialSolution<T> {
    pub grid: Vec<T>,
    pub values: Vec<T>,
    pub node_count: usize,
    /// `∫|ψ|² dr` of the normalized samples on `grid`.
    pub norm: T,
}

/// `S = √(1 + 4ε_nl² + (4/ε)(γ1/ε − γ2))`.
pub fn exponent_s<T: Real>(gamma1: T, gamma2: T, eps_nl: T, epsilon: T) -> Result<T> {
    if epsilon == T::zero() {
        return Err(Error::ConstantMass);
    }
    let four: T = lit(4.0);
    let radicand = T::one() + four * eps_nl * eps_nl + four / epsilon * (gamma1 / epsilon - gamma2);
    if radicand < T::zero() || !radicand.is_finite() {
        return Err(Error::ComplexExponent { radicand: radicand.to_f64().unwrap_or(f64::NAN) });
    }
    Ok(radicand.sqrt())
}

/// Signed Jacobi parameter `S = 2√γ1/ε − (2n+1) − 2ε_nl`; its magnitude is
/// [`exponent_s`]. Near the mass singularity `ψ ~ w^{(S−1)/2}`, so the level is
/// normalizable only for `S > 0`.
pub fn jacobi_s<T: Real>(gamma1: T, eps_nl: T, epsilon: T, n: u32) -> Result<T> {
    if epsilon == T::zero() {
        return Err(Error::ConstantMass);
    }
    let two: T = lit(2.0);
    Ok(two * gamma1.sqrt() / epsilon - (two * from_u32::<T>(n) + T::one()) - two * eps_nl)
}

impl<T: Real> WaveParams<T> {
    /// Parameters of level `n`; the level must be bound, normalizable and `0 < ε < 1`.
    pub fn for_level(inp: &SpectrumInputs<T>, n: u32) -> Result<Self> {
        let level = bound_level(inp, n)?;
        let g1 = gamma1(inp)?;
        let magnitude = exponent_s(g1, gamma2(inp), level.eps_nl, inp.epsilon)?;
        let s = jacobi_s(g1, level.eps_nl, inp.epsilon, n)?;
        debug_assert!((s.abs() - magnitude).abs() <= lit::<T>(1e-6) * magnitude.max(T::one()));
        if s <= T::zero() {
            return Err(Error::NonNormalizable { n, s: s.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(Self { eps_nl: level.eps_nl, s, epsilon: inp.epsilon, b: inp.molecule.b(), re: inp.molecule.re, n })
    }

    fn parts(&self, r: T) -> Option<(T, T, T)> {
        let t = -self.b * (r - self.re);
        let w = T::one() - self.epsilon * t.exp();
        if w <= T::zero() {
            return None;
        }
        let f = hyp2f1_terminating(
            self.n,
            from_u32::<T>(self.n) + lit::<T>(2.0) * self.eps_nl + self.s + T::one(),
            lit::<T>(2.0) * self.eps_nl + T::one(),
            self.epsilon * t.exp(),
        )
        .expect("lower parameter 2 eps_nl + 1 > 1");
        Some((t, w, f))
    }

    /// `ln` of the envelope `z^{ε_nl} w^{(S−1)/2}` of ψ.
    pub fn log_envelope(&self, r: T) -> T {
        match self.parts(r) {
            Some((t, w, _)) => self.eps_nl * t + (self.s - T::one()) / lit(2.0) * w.ln(),
            None => T::neg_infinity(),
        }
    }

    /// `ψ(r) · e^{−shift}`, unnormalized; zero where `εz ≥ 1`.
    pub fn psi_shifted(&self, r: T, shift: T) -> T {
        match self.parts(r) {
            Some((t, w, f)) => (self.eps_nl * t + (self.s - T::one()) / lit(2.0) * w.ln() - shift).exp() * f,
            None => T::zero(),
        }
    }

    /// `φ(r) · e^{−shift}` of the first-derivative-free equation.
    pub fn phi_shifted(&self, r: T, shift: T) -> T {
        match self.parts(r) {
            Some((t, w, f)) => (self.eps_nl * t + (self.s + T::one()) / lit(2.0) * w.ln() - shift).exp() * f,
            None => T::zero(),
        }
    }
}

/// Constant-mass eigenfunction in Laguerre form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreWave<T> {
    pub eps_nl: T,
    pub sqrt_gamma1: T,
    pub b: T,
    pub re: T,
    pub n: u32,
}

impl<T: Real> LaguerreWave<T> {
    pub fn for_level(inp: &SpectrumInputs<T>, n: u32) -> Result<Self> {
        if inp.epsilon != T::zero() {
            return Err(Error::InvalidParameter("Laguerre form requires epsilon = 0".into()));
        }
        let level = bound_level(inp, n)?;
        Ok(Self { eps_nl: level.eps_nl, sqrt_gamma1: gamma1(inp)?.sqrt(), b: inp.molecule.b(), re: inp.molecule.re, n })
    }

    fn x(&self, r: T) -> T {
        lit::<T>(2.0) * self.sqrt_gamma1 * (-self.b * (r - self.re)).exp()
    }

    pub fn log_envelope(&self, r: T) -> T {
        let x = self.x(r);
        self.eps_nl * x.ln() - x / lit(2.0)
    }

    pub fn psi_shifted(&self, r: T, shift: T) -> T {
        let x = self.x(r);
        (self.eps_nl * x.ln() - x / lit(2.0) - shift).exp() * laguerre(self.n, lit::<T>(2.0) * self.eps_nl, x)
    }
}

fn bound_level<T: Real>(inp: &SpectrumInputs<T>, n: u32) -> Result<crate::spectrum::EnergyLevel<T>> {
    let unbound = || Error::UnboundLevel { n, n_max: n_max(inp, NmaxConvention::Strict).ok() };
    match energy(inp, n) {
        Ok(level) if level.bound_class == BoundClass::Bound => Ok(level),
        Ok(_) | Err(Error::DegenerateDenominator { .. }) => Err(unbound()),
        Err(e) => Err(e),
    }
}

/// `DEFAULT_GRID_POINTS` radii on `[max(1e-3, re − 5/b), re + 40/b]`, denser near `re`
/// (`r = re + sinh(t)/b` with uniform `t`).
pub fn default_grid<T: Real>(molecule: &MoleculeParams<T>) -> Vec<T> {
    grid_with_points(molecule, DEFAULT_GRID_POINTS)
}

pub fn grid_with_points<T: Real>(molecule: &MoleculeParams<T>, points: usize) -> Vec<T> {
    let b = molecule.b();
    let re = molecule.re;
    let lo = (re - lit::<T>(5.0) / b).max(lit(1e-3));
    let hi = re + lit::<T>(40.0) / b;
    let t_lo = ((lo - re) * b).asinh();
    let t_hi = ((hi - re) * b).asinh();
    let last = T::from_usize(points - 1).unwrap();
    (0..points)
        .map(|i| {
            let u = T::from_usize(i).unwrap() / last;
            re + (t_lo + (t_hi - t_lo) * u).sinh() / b
        })
        .collect()
}

/// Number of sign changes, ignoring exact zeros.
pub fn count_nodes<T: Real>(values: &[T]) -> usize {
    let mut last = T::zero();
    let mut nodes = 0;
    for &v in values {
        if v != T::zero() {
            if last != T::zero() && (v > T::zero()) != (last > T::zero()) {
                nodes += 1;
            }
            last = v;
        }
    }
    nodes
}

fn sample_normalized<T: Real>(grid: &[T], log_env: impl Fn(T) -> T, psi: impl Fn(T, T) -> T) -> Result<RadialSolution<T>> {
    if grid.len() < 3 || grid.windows(2).any(|w| !(w[1] > w[0])) || !(grid[0] > T::zero()) {
        return Err(Error::InvalidParameter("grid must be increasing, positive, with at least 3 points".into()));
    }
    let shift = grid.iter().map(|&r| log_env(r)).fold(T::neg_infinity(), T::max);
    let (lo, hi) = (grid[0], grid[grid.len() - 1]);
    let (norm2, converged) = simpson_refined(|r| psi(r, shift).powi(2), lo, hi, lit(NORM_REFINE_TOL), 16);
    if !converged {
        log::warn!("norm quadrature did not reach relative change {NORM_REFINE_TOL}");
    }
    let scale = T::one() / norm2.sqrt();
    let values: Vec<T> = grid.iter().map(|&r| psi(r, shift) * scale).collect();
    let squares: Vec<T> = values.iter().map(|v| *v * *v).collect();
    Ok(RadialSolution {
        grid: grid.to_vec(),
        node_count: count_nodes(&values),
        norm: simpson_samples(grid, &squares),
        values,
    })
}

/// Normalized PDM wave function of level `n` sampled on `grid`.
pub fn psi_pdm<T: Real>(inp: &SpectrumInputs<T>, n: u32, grid: &[T]) -> Result<RadialSolution<T>> {
    if inp.epsilon == T::zero() {
        return Err(Error::ConstantMass);
    }
    let wp = WaveParams::for_level(inp, n)?;
    sample_normalized(grid, |r| wp.log_envelope(r), |r, s| wp.psi_shifted(r, s))
}

/// Normalized constant-mass wave function of level `n` sampled on `grid`.
pub fn psi_constmass<T: Real>(inp: &SpectrumInputs<T>, n: u32, grid: &[T]) -> Result<RadialSolution<T>> {
    let lw = LaguerreWave::for_level(inp, n)?;
    sample_normalized(grid, |r| lw.log_envelope(r), |r, s| lw.psi_shifted(r, s))
}

/// Dispatches to the Laguerre form at `ε = 0` and to the Jacobi form otherwise.
pub fn psi<T: Real>(inp: &SpectrumInputs<T>, n: u32, grid: &[T]) -> Result<RadialSolution<T>> {
    if inp.epsilon == T::zero() {
        psi_constmass(inp, n, grid)
    } else {
        psi_pdm(inp, n, grid)
    }
}

/// Result of evaluating the closed-form normalization series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizationDiagnostic {
    /// Value of the `m`-sum (before the `[·]^{−1/2}`).
    pub series_sum: f64,
    pub terms_used: usize,
    /// `∫|N ψ̃|² dr` using the series constant; 1 if the series were right.
    pub series_norm: Option<f64>,
    /// Quadrature norm of the normalized function (1 by construction).
    pub quadrature_norm: f64,
    pub ratio: Option<f64>,
    pub warning: Option<String>,
}

/// Evaluates the closed-form normalization constant
///
/// ```text
/// N = 1/Γ(2ε_nl+1) · [ n Γ(S+2) / (2b Γ(n+2ε_nl+1)) Σ_m (−1)^m (n+2ε_nl+S+1)_m Γ(n+m)
///         / (m! Γ(m+2ε_nl+1) Γ(m+2ε_nl+S+2)) · f_m ]^{−1/2}
/// f_m = ₃F₂(−n, 2ε_nl+m, n+2ε_nl+S+1; 2ε_nl+m+S+2, 2ε_nl+1; 1)
/// ```
///
/// and compares the norm it implies with quadrature. `n Γ(n+m)` is taken in
/// its `n → 0` limit for the ground state. Purely diagnostic; logged, never
/// asserted.
pub fn normalization_series_check(params: &WaveParams<f64>, grid: &[f64]) -> NormalizationDiagnostic {
    let WaveParams { eps_nl: e, s, b, n, .. } = *params;
    let nf = n as f64;
    let two_e = 2.0 * e;
    let mut sum = 0.0;
    let mut terms = 0;
    let mut warning = None;
    let mut small_run = 0;
    for m in 0..20_000u32 {
        let mf = m as f64;
        // ln|n Γ(n+m)| with the n → 0 limit
        let ln_ngamma = match (n, m) {
            (0, 0) => 0.0,
            (0, _) => f64::NEG_INFINITY,
            _ => nf.ln() + ln_gamma(nf + mf),
        };
        let ln_poch = ln_gamma(nf + two_e + s + 1.0 + mf) - ln_gamma(nf + two_e + s + 1.0);
        let ln_mag = ln_ngamma + ln_poch - ln_gamma(mf + 1.0) - ln_gamma(mf + two_e + 1.0) - ln_gamma(mf + two_e + s + 2.0);
        let f = hyp3f2_terminating(n, two_e + mf, nf + two_e + s + 1.0, two_e + mf + s + 2.0, two_e + 1.0, 1.0)
            .unwrap_or(f64::NAN);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        // keep the sum in units of the m = 0 magnitude of Γ(S+2)-scaled terms
        let term = sign * (ln_mag + ln_gamma(s + 2.0)).exp() * f;
        terms += 1;
        if !term.is_finite() {
            warning = Some(format!("non-finite series term at m = {m}"));
            break;
        }
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() || term == 0.0 {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        if m == 19_999 {
            warning = Some("series did not converge within 20000 terms".into());
        }
    }
    let ln_bracket = if sum > 0.0 { sum.ln() - (2.0 * b).ln() - ln_gamma(nf + two_e + 1.0) } else { f64::NAN };
    let wave = WaveParams { ..*params };
    let shift = grid.iter().map(|&r| wave.log_envelope(r)).fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = (grid[0], grid[grid.len() - 1]);
    let (raw, _) = simpson_refined(|r| wave.psi_shifted(r, shift).powi(2), lo, hi, NORM_REFINE_TOL, 16);
    let series_norm = if ln_bracket.is_finite() {
        // N · n! Γ(2ε+1)/Γ(n+2ε+1) multiplies the unshifted function
        let ln_n = -ln_gamma(two_e + 1.0) - 0.5 * ln_bracket;
        let ln_pref = ln_gamma(nf + 1.0) + ln_gamma(two_e + 1.0) - ln_gamma(nf + two_e + 1.0);
        Some((2.0 * (ln_n + ln_pref + shift)).exp() * raw)
    } else {
        warning.get_or_insert_with(|| format!("series sum is not positive ({sum:e})"));
        None
    };
    let diag = NormalizationDiagnostic {
        series_sum: sum,
        terms_used: terms,
        series_norm,
        quadrature_norm: 1.0,
        ratio: series_norm,
        warning,
    };
    match &diag.warning {
        Some(w) => log::warn!("normalization series (n = {n}): {w}"),
        None => log::info!("normalization series (n = {n}): series/quadrature ratio = {:?}", diag.ratio),
    }
    diag
}

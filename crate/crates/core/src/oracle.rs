//! Numerov shooting eigensolver for `φ'' = f(r) φ`,
//! `f(r) = (2 m(r)/ħ²) (U_eff(r) − E)`.
//!
//! `U_eff` is assembled from the Morse term, the ordering potential and the
//! `ψ = √m φ` correction (both through the analytic mass derivatives, not the
//! `c1 y + c2 y²` shortcut), and the centrifugal term in Pekeris or exact form.
//! Levels are located by node counting and bisection; the step is then halved
//! and the difference between the two eigenvalues is the grid error estimate.
//!
//! When the mass singularity `ε e^{−b(r−re)} = 1` lies above `1e-3 Å`, the
//! domain starts just past it and the equation is integrated on a logarithmic
//! grid in `r − r_s`, seeded with the regular local branch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordering::{check_epsilon, ordering_potential_at, pct_term_at, MassProfile, OrderingScheme};
use crate::pekeris::{pekeris_coeffs, rotational_potential_at, CentrifugalMode, PekerisCoeffs};
use crate::scalar::{lit, Real};
use crate::spectrum::CouplingConvention;
use crate::units::MoleculeParams;

pub const DEFAULT_POINTS: usize = 40001;
pub const DEFAULT_TOL_EV: f64 = 1e-7;
pub const DEFAULT_R_MIN: f64 = 1e-3;

/// Bound on `h² |f| / 12` at the first integrated point.
const NUMEROV_START_LIMIT: f64 = 0.5;
const RENORM_LIMIT: f64 = 1e150;
/// Distance from the mass singularity to the first grid point, in units of `1/b`.
const SINGULAR_OFFSET: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleGrid<T> {
    pub r_min: T,
    pub r_max: T,
    pub step: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleProblem<T> {
    pub molecule: MoleculeParams<T>,
    pub scheme: OrderingScheme<T>,
    pub epsilon: T,
    pub l: u32,
    pub centrifugal_mode: CentrifugalMode,
    pub convention: CouplingConvention,
    pub grid: OracleGrid<T>,
    /// Set when `grid.r_min` sits just above the mass singularity.
    pub singular_start: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleResult<T> {
    pub n: u32,
    /// Eigenvalue at the finer step (eV).
    pub energy: T,
    pub converged: bool,
    pub grid_error_estimate: T,
    /// Node count of the solution just below the eigenvalue.
    pub nodes: usize,
}

impl<T: Real> OracleProblem<T> {
    /// Problem on the default grid: `[1e-3 Å, re + 40/b]` with `DEFAULT_POINTS`
    /// points, the lower end raised past the mass singularity when needed.
    pub fn new(
        molecule: MoleculeParams<T>,
        scheme: OrderingScheme<T>,
        epsilon: T,
        l: u32,
        centrifugal_mode: CentrifugalMode,
    ) -> Result<Self> {
        check_epsilon(epsilon)?;
        let r_max = molecule.re + lit::<T>(40.0) / molecule.b();
        let mut r_min: T = lit(DEFAULT_R_MIN);
        let mut singular_start = false;
        let profile = MassProfile::for_molecule(&molecule, epsilon)?;
        let intervals = T::from_usize(DEFAULT_POINTS - 1).unwrap();
        if let Some(rs) = profile.singular_radius() {
            if rs >= r_min {
                r_min = rs + lit::<T>(SINGULAR_OFFSET) / molecule.b();
                singular_start = true;
            }
        }
        let grid = OracleGrid { r_min, r_max, step: (r_max - r_min) / intervals };
        Ok(Self {
            molecule,
            scheme,
            epsilon,
            l,
            centrifugal_mode,
            convention: CouplingConvention::Physical,
            grid,
            singular_start,
        })
    }

    pub fn with_convention(mut self, convention: CouplingConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn with_grid(mut self, grid: OracleGrid<T>) -> Result<Self> {
        self.grid = grid;
        self.singular_start = false;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.grid;
        let b = self.molecule.b();
        if !(g.r_min > T::zero()) {
            return Err(Error::InvalidParameter("oracle r_min must be positive".into()));
        }
        if g.r_max < self.molecule.re + lit::<T>(30.0) / b {
            return Err(Error::InvalidParameter("oracle r_max must be at least re + 30/b".into()));
        }
        if !(g.step > T::zero()) || g.step > (g.r_max - g.r_min) / lit(20000.0) {
            return Err(Error::InvalidParameter("oracle step must not exceed (r_max - r_min)/20000".into()));
        }
        if !self.singular_start {
            if let Some(rs) = self.profile()?.singular_radius() {
                if rs >= g.r_min && rs <= g.r_max {
                    return Err(Error::SingularMass { r: rs.to_f64().unwrap_or(f64::NAN) });
                }
            }
        }
        Ok(())
    }

    pub fn profile(&self) -> Result<MassProfile<T>> {
        MassProfile::for_molecule(&self.molecule, self.epsilon)
    }

    fn pekeris(&self) -> PekerisCoeffs<T> {
        pekeris_coeffs(self.molecule.nu).expect("molecule nu is positive")
    }

    /// `U_eff(r)` in eV and the kinetic factor `2 m(r)/ħ²`.
    pub fn potential_parts(&self, r: T) -> Result<(T, T)> {
        let profile = self.profile()?;
        let k = self.convention.scale(&self.molecule);
        let extra = ordering_potential_at(&self.scheme, &profile, r)? + pct_term_at(&profile, r)?;
        let rot = rotational_potential_at(&self.pekeris(), self.l, &self.molecule, r, self.centrifugal_mode)?;
        let u = self.molecule.morse_at(r) + k * extra + rot;
        let kin = self.molecule.kinetic_scale() * profile.mass_ratio_at(r)?;
        Ok((u, kin))
    }
}

/// `r ↦ f(r)` at energy `e`; errors if the mass singularity lies in the grid.
pub fn effective_rhs<T: Real>(p: &OracleProblem<T>, e: T) -> Result<impl Fn(T) -> Result<T> + '_> {
    p.validate()?;
    Ok(move |r: T| {
        let (u, kin) = p.potential_parts(r)?;
        Ok(kin * (u - e))
    })
}

/// Grid-resolved pieces of `F_i = weight_i (u_i − E) + shift`.
///
/// On a uniform `r` grid `weight = 2m/ħ²` and `shift = 0`. From a singular
/// start the grid is uniform in `t = ln(r − r_s)` and `φ = e^{t/2} g` turns the
/// equation into `g'' = (e^{2t} f + 1/4) g`, which is regular as `t → −∞`.
struct Discretized<T> {
    h: T,
    weight: Vec<T>,
    u: Vec<T>,
    shift: T,
    log_grid: bool,
    seed: T,
}

impl<T: Real> Discretized<T> {
    fn build(p: &OracleProblem<T>, refine: u32) -> Result<Self> {
        p.validate()?;
        let g = p.grid;
        let scale = T::from_u32(1 << refine).unwrap();
        let count = ((g.r_max - g.r_min) / g.step).round().to_usize().unwrap() * (1 << refine) + 1;
        let last = T::from_usize(count - 1).unwrap();
        let singular = if p.singular_start { p.profile()?.singular_radius() } else { None };
        let (h, radii): (T, Vec<T>) = match singular {
            Some(rs) => {
                let (t_lo, t_hi) = ((g.r_min - rs).ln(), (g.r_max - rs).ln());
                let h = (t_hi - t_lo) / last;
                (h, (0..count).map(|i| rs + (t_lo + h * T::from_usize(i).unwrap()).exp()).collect())
            }
            None => {
                let h = g.step / scale;
                (h, (0..count).map(|i| g.r_min + h * T::from_usize(i).unwrap()).collect())
            }
        };
        let mut weight = Vec::with_capacity(count);
        let mut u = Vec::with_capacity(count);
        for &r in &radii {
            let (ui, ki) = p.potential_parts(r)?;
            u.push(ui);
            weight.push(match singular {
                Some(rs) => ki * (r - rs) * (r - rs),
                None => ki,
            });
        }
        let seed = match p.centrifugal_mode {
            CentrifugalMode::Pekeris => h,
            CentrifugalMode::Exact => h.powi(p.l as i32 + 1),
        };
        let shift = if singular.is_some() { lit(0.25) } else { T::zero() };
        Ok(Self { h, weight, u, shift, log_grid: singular.is_some(), seed })
    }

    /// Integrates outward; returns the terminal value and the node count.
    fn shoot(&self, e: T) -> (T, usize) {
        let h2_12 = self.h * self.h / lit(12.0);
        let n = self.u.len();
        let f = |i: usize| self.weight[i] * (self.u[i] - e) + self.shift;
        let mut start = 0;
        while start + 2 < n && (h2_12 * f(start)).abs() > lit(NUMEROV_START_LIMIT) {
            start += 1;
        }
        let (mut prev, mut cur) = if self.log_grid {
            // regular local branch g ∝ e^{√F t}, F → const at the singular point
            (T::one(), (self.h * f(start).max(T::zero()).sqrt()).exp())
        } else {
            (T::zero(), self.seed)
        };
        if cur == T::zero() {
            cur = T::min_positive_value();
        }
        let mut nodes = 0;
        let mut fp = f(start);
        let mut fc = f(start + 1);
        for i in start + 1..n - 1 {
            let fnext = f(i + 1);
            let next = (lit::<T>(2.0) * (T::one() + lit::<T>(5.0) * h2_12 * fc) * cur - (T::one() - h2_12 * fp) * prev)
                / (T::one() - h2_12 * fnext);
            if next != T::zero() && cur != T::zero() && (next > T::zero()) != (cur > T::zero()) {
                nodes += 1;
            }
            prev = cur;
            cur = next;
            fp = fc;
            fc = fnext;
            if cur.abs() > lit(RENORM_LIMIT) {
                let s = cur.abs();
                prev = prev / s;
                cur = cur / s;
            }
        }
        (cur, nodes)
    }

    fn threshold(&self) -> T {
        *self.u.last().unwrap()
    }

    fn floor(&self, p: &OracleProblem<T>) -> Result<T> {
        let mass_ratio = p.profile()?.mass_ratio_at(p.molecule.re)?;
        let deep = -lit::<T>(1.1) * p.molecule.de * mass_ratio.max(T::one());
        let umin = self.u.iter().copied().fold(T::infinity(), T::min);
        Ok(deep.min(umin - lit::<T>(1e-3) * p.molecule.de))
    }

    fn eigenvalue(&self, p: &OracleProblem<T>, n: u32, tol: T) -> Result<(T, usize)> {
        let mut lo = self.floor(p)?;
        let mut hi = self.threshold();
        let threshold = hi;
        if self.shoot(hi).1 <= n as usize {
            return Err(Error::NoSuchLevel { n, threshold: threshold.to_f64().unwrap_or(f64::NAN) });
        }
        // narrow by node count until the window holds the n → n+1 transition
        while hi - lo > tol {
            let mid = (lo + hi) / lit(2.0);
            if self.shoot(mid).1 > n as usize {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let below = self.shoot(lo);
        let above = self.shoot(hi);
        // the terminal value changes sign across the eigenvalue; interpolate linearly
        let e = if below.0 != above.0 && (below.0 > T::zero()) != (above.0 > T::zero()) {
            let t = below.0 / (below.0 - above.0);
            lo + (hi - lo) * t.max(T::zero()).min(T::one())
        } else {
            (lo + hi) / lit(2.0)
        };
        Ok((e, below.1))
    }
}

/// Terminal value at `r_max` and the number of interior sign changes.
pub fn numerov_shoot<T: Real>(p: &OracleProblem<T>, e: T) -> Result<(T, usize)> {
    Ok(Discretized::build(p, 0)?.shoot(e))
}

/// Locates the level with `n` nodes to bisection width `tol` (eV).
pub fn solve_level<T: Real>(p: &OracleProblem<T>, n: u32, tol: T) -> Result<OracleResult<T>> {
    if !(tol > T::zero()) {
        return Err(Error::InvalidParameter("oracle tolerance must be positive".into()));
    }
    let coarse = Discretized::build(p, 0)?;
    let (e_coarse, _) = coarse.eigenvalue(p, n, tol)?;
    drop(coarse);
    let fine = Discretized::build(p, 1)?;
    let (e_fine, nodes) = fine.eigenvalue(p, n, tol)?;
    let err = (e_fine - e_coarse).abs();
    Ok(OracleResult { n, energy: e_fine, converged: err <= tol, grid_error_estimate: err, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{extra_potential_poly, Preset};
    use crate::spectrum::{energy, SpectrumInputs};
    use crate::units::registry_lookup;

    fn problem(name: &str, eps: f64, l: u32, mode: CentrifugalMode) -> OracleProblem<f64> {
        OracleProblem::new(registry_lookup(name).unwrap(), OrderingScheme::preset(Preset::Weyl), eps, l, mode).unwrap()
    }

    #[test]
    fn rhs_constant_mass_is_morse() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        let e = -3.0;
        let f = effective_rhs(&p, e).unwrap();
        let m = &p.molecule;
        for r in [0.3, 0.7, 1.5, 4.0] {
            let want = m.kinetic_scale() * (m.morse_at(r) - e);
            assert!((f(r).unwrap() - want).abs() <= 1e-12 * want.abs());
        }
        // turning point
        let r_t = 1.0;
        let f = effective_rhs(&p, m.morse_at(r_t)).unwrap();
        assert!(f(r_t).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rhs_matches_polynomial_route() {
        let p = problem("H2", 0.3, 2, CentrifugalMode::Pekeris);
        let e = -2.5;
        let f = effective_rhs(&p, e).unwrap();
        let prof = p.profile().unwrap();
        let (c1, c2) = extra_potential_poly(&p.scheme, &prof);
        let m = &p.molecule;
        let pk = pekeris_coeffs(m.nu).unwrap();
        for i in 0..50 {
            let r = p.grid.r_min + 0.05 + 0.3 * i as f64;
            let y = prof.y(r);
            let u = m.morse_at(r) + c1 * y + c2 * y * y + m.b0(2) * pk.profile(y);
            let want = m.kinetic_scale() * prof.mass_ratio_at(r).unwrap() * (u - e);
            assert!((f(r).unwrap() - want).abs() <= 1e-12 * want.abs().max(1e-300), "r={r}");
        }
    }

    #[test]
    fn explicit_grid_through_singularity_is_rejected() {
        let p = problem("H2", 0.5, 0, CentrifugalMode::Pekeris);
        assert!(p.singular_start);
        let g = OracleGrid { r_min: 1e-3, r_max: 25.0, step: 25.0 / 40000.0 };
        assert!(matches!(p.with_grid(g), Err(Error::SingularMass { .. })));
    }

    #[test]
    fn grid_invariants_enforced() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        let coarse = OracleGrid { r_min: 1e-3, r_max: 25.0, step: 0.01 };
        assert!(p.clone().with_grid(coarse).is_err());
        let short = OracleGrid { r_min: 1e-3, r_max: 5.0, step: 1e-4 };
        assert!(p.with_grid(short).is_err());
    }

    #[test]
    fn deep_energy_is_nodeless() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        let (v, nodes) = numerov_shoot(&p, -20.0).unwrap();
        assert_eq!(nodes, 0);
        assert!(v > 0.0);
    }

    #[test]
    fn node_appears_above_ground_state() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        let inp = SpectrumInputs::new(p.molecule.clone(), p.scheme, 0.0, 0).unwrap();
        let e0 = energy(&inp, 0).unwrap().energy;
        assert_eq!(numerov_shoot(&p, e0 - 1e-3).unwrap().1, 0);
        assert_eq!(numerov_shoot(&p, e0 + 1e-3).unwrap().1, 1);
        let res = solve_level(&p, 0, 1e-9).unwrap();
        let (a, _) = numerov_shoot(&p, res.energy - 1e-6).unwrap();
        let (b, _) = numerov_shoot(&p, res.energy + 1e-6).unwrap();
        assert!(a.signum() != b.signum());
    }

    #[test]
    fn h2_ground_state() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        let res = solve_level(&p, 0, DEFAULT_TOL_EV).unwrap();
        assert!((res.energy + 4.476013).abs() < 1e-5, "{res:?}");
        assert_eq!(res.nodes, 0);
    }

    #[test]
    fn h2_pdm_ground_state_tabulated() {
        let p = problem("H2", 0.1, 0, CentrifugalMode::Pekeris).with_convention(CouplingConvention::Tabulated);
        let res = solve_level(&p, 0, DEFAULT_TOL_EV).unwrap();
        assert!((res.energy + 4.50225).abs() < 1e-4, "{res:?}");
    }

    #[test]
    fn pdm_matches_closed_form() {
        for eps in [0.4, 0.8] {
            let p = problem("H2", eps, 5, CentrifugalMode::Pekeris);
            let inp = SpectrumInputs::new(p.molecule.clone(), p.scheme, eps, 5).unwrap();
            for n in [0, 4] {
                let res = solve_level(&p, n, DEFAULT_TOL_EV).unwrap();
                let closed = energy(&inp, n).unwrap().energy;
                assert!((res.energy - closed).abs() <= 1e-6_f64.max(res.grid_error_estimate), "eps={eps} n={n}: {res:?} vs {closed}");
            }
        }
    }

    #[test]
    fn no_such_level() {
        let p = problem("H2", 0.0, 0, CentrifugalMode::Pekeris);
        assert!(matches!(solve_level(&p, 40, 1e-6), Err(Error::NoSuchLevel { n: 40, .. })));
    }
}

//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a computed result exceeds its tolerance,
//! 2 for usage, configuration or request errors.

pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{solve_level, OracleProblem, DEFAULT_TOL_EV};
use crate::ordering::{extra_potential_poly, MassProfile, OrderingScheme};
use crate::pekeris::{pekeris_coeffs, rotational_potential_at, CentrifugalMode};
use crate::spectrum::{energy, CouplingConvention, SpectrumInputs};
use crate::tables::{table_report, TableDiffReport};
use crate::units::{MoleculeParams, Registry};
use crate::wavefn::{grid_with_points, psi, DEFAULT_GRID_POINTS};
use output::{csv, json, opt9, sig9};

pub const EXIT_OK: i32 = 0;
pub const EXIT_TOLERANCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "morsepdm", version, about = "Morse oscillator bound states with position-dependent mass")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies over a (molecule, ε, l, n) sweep.
    Spectrum(SweepArgs),
    /// Recompute a printed reference table (2 to 6) and diff it.
    Table(TableArgs),
    /// Sample a normalized radial wave function.
    Wavefunction(WaveArgs),
    /// Potential curves: Morse, mass-ordering term, both centrifugal forms.
    Potential(PotentialArgs),
    /// Compare the closed form with the Numerov solver.
    Oracle(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Preset name or explicit `a,alpha,gamma`.
    #[arg(long, default_value = "weyl")]
    pub ordering: String,
    /// `physical` or `tabulated` scaling of the mass-coupling terms.
    #[arg(long, default_value = "physical")]
    pub convention: String,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Comma-separated molecule names, or `all`.
    #[arg(long, default_value = "all")]
    pub molecule: String,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Comma-separated mass parameters in [0, 1).
    #[arg(long, default_value = "0")]
    pub epsilon: String,
    /// Vibrational range `lo..hi` (inclusive) or a single value.
    #[arg(long, default_value = "0")]
    pub n: String,
    /// Angular-momentum range `lo..hi` (inclusive) or a single value.
    #[arg(long, default_value = "0")]
    pub l: String,
    /// Agreement tolerance in eV (oracle only).
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    pub id: u32,
    /// Override the table tolerance (eV).
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct WaveArgs {
    #[arg(long)]
    pub molecule: String,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long)]
    pub molecule: String,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Radial range `lo..hi` in Å; defaults to `[1e-3, 4 re]`.
    #[arg(long)]
    pub r_range: Option<String>,
    #[arg(long, default_value_t = 401)]
    pub points: usize,
    /// Accepted for symmetry with the other commands; both forms are emitted.
    #[arg(long, default_value = "pekeris")]
    pub centrifugal: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub molecule: String,
    pub ordering: String,
    pub epsilon: f64,
    pub n: u32,
    pub l: u32,
    pub eps_nl: Option<f64>,
    pub energy_ev: Option<f64>,
    /// `bound`, `marginal`, `unbound`, or `undefined` when no spectrum exists.
    pub bound_class: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaveHeader {
    pub molecule: String,
    pub n: u32,
    pub l: u32,
    pub epsilon: f64,
    pub ordering: String,
    pub node_count: usize,
    pub norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaveOutput {
    pub header: WaveHeader,
    pub r_angstrom: Vec<f64>,
    pub psi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialRow {
    pub r_angstrom: f64,
    pub v_morse_ev: f64,
    /// Absent where the mass is singular.
    pub u_extra_ev: Option<f64>,
    pub v_rot_pekeris_ev: f64,
    pub v_rot_exact_ev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRow {
    pub molecule: String,
    pub n: u32,
    pub l: u32,
    pub epsilon: f64,
    pub e_closed: Option<f64>,
    pub e_oracle_pekeris: Option<f64>,
    pub e_oracle_exact: Option<f64>,
    pub pekeris_error: Option<f64>,
    pub closed_vs_oracle_diff: Option<f64>,
    pub grid_error: Option<f64>,
    pub converged: bool,
    pub error: Option<String>,
}

impl OracleRow {
    /// Closed form and Numerov agree within `max(tol, grid error)`.
    pub fn within(&self, tol: f64) -> bool {
        match (self.closed_vs_oracle_diff, self.grid_error) {
            (Some(d), Some(g)) => d <= tol.max(g),
            _ => false,
        }
    }
}

/// Parses `lo..hi` (inclusive) or a single integer.
pub fn parse_range(s: &str, flag: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::Config { location: format!("--{flag}"), message: format!("expected `lo..hi` or an integer, got `{s}`") };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().trim_start_matches('=').parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::Config { location: format!("--{flag}"), message: format!("empty range `{s}`") });
    }
    Ok(lo..=hi)
}

/// Parses a comma list of `ε ∈ [0, 1)`, sorted and deduplicated.
pub fn parse_epsilons(s: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let e: f64 = part.trim().parse().map_err(|_| Error::Config {
            location: "--epsilon".into(),
            message: format!("not a number: `{}`", part.trim()),
        })?;
        if !(0.0..1.0).contains(&e) {
            return Err(Error::Config { location: "--epsilon".into(), message: format!("{e} is outside [0, 1)") });
        }
        out.push(e);
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

fn parse_r_range(s: &str) -> Result<(f64, f64)> {
    let bad = |m: String| Error::Config { location: "--r-range".into(), message: m };
    let (a, b) = s.split_once("..").ok_or_else(|| bad(format!("expected `lo..hi`, got `{s}`")))?;
    let lo: f64 = a.trim().parse().map_err(|_| bad(format!("not a number: `{a}`")))?;
    let hi: f64 = b.trim().parse().map_err(|_| bad(format!("not a number: `{b}`")))?;
    if !(lo > 0.0) {
        return Err(bad(format!("radii must be positive, got {lo}")));
    }
    if !(hi > lo) {
        return Err(bad(format!("empty range `{s}`")));
    }
    Ok((lo, hi))
}

fn select_molecules(reg: &Registry, s: &str) -> Result<Vec<MoleculeParams<f64>>> {
    let mut out: Vec<MoleculeParams<f64>> = if s.trim().eq_ignore_ascii_case("all") {
        reg.iter().cloned().collect()
    } else {
        s.split(',').map(|n| reg.lookup(n.trim())).collect::<Result<_>>()?
    };
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out.dedup_by(|a, b| a.name == b.name);
    Ok(out)
}

struct Model {
    scheme: OrderingScheme<f64>,
    label: String,
    convention: CouplingConvention,
}

fn parse_model(m: &ModelArgs) -> Result<Model> {
    let scheme: OrderingScheme<f64> = m.ordering.parse()?;
    let label = match m.ordering.parse::<crate::ordering::Preset>() {
        Ok(p) => p.name().to_owned(),
        Err(_) => format!("a={};alpha={};gamma={}", scheme.a(), scheme.alpha(), scheme.gamma()),
    };
    Ok(Model { scheme, label, convention: m.convention.parse()? })
}

struct Sweep {
    molecules: Vec<MoleculeParams<f64>>,
    model: Model,
    epsilons: Vec<f64>,
    ns: RangeInclusive<u32>,
    ls: RangeInclusive<u32>,
}

impl Sweep {
    fn parse(a: &SweepArgs, reg: &Registry) -> Result<Self> {
        Ok(Self {
            molecules: select_molecules(reg, &a.molecule)?,
            model: parse_model(&a.model)?,
            epsilons: parse_epsilons(&a.epsilon)?,
            ns: parse_range(&a.n, "n")?,
            ls: parse_range(&a.l, "l")?,
        })
    }

    /// Cross product in output order: molecule, ε, l, n.
    fn points(&self) -> Vec<(&MoleculeParams<f64>, f64, u32, u32)> {
        let mut v = Vec::new();
        for m in &self.molecules {
            for &e in &self.epsilons {
                for l in self.ls.clone() {
                    for n in self.ns.clone() {
                        v.push((m, e, l, n));
                    }
                }
            }
        }
        v
    }
}

/// Closed-form sweep; levels without a spectrum are reported, not dropped.
pub fn spectrum_rows(a: &SweepArgs, reg: &Registry) -> Result<Vec<SpectrumRow>> {
    let sw = Sweep::parse(a, reg)?;
    sw.points()
        .into_iter()
        .map(|(m, e, l, n)| {
            let inp = SpectrumInputs::new(m.clone(), sw.model.scheme, e, l)?.with_convention(sw.model.convention);
            let (eps_nl, energy_ev, class) = match energy(&inp, n) {
                Ok(lv) => (Some(lv.eps_nl), Some(lv.energy), lv.bound_class.as_str().to_owned()),
                Err(Error::NoSpectrum { .. }) | Err(Error::DegenerateDenominator { .. }) => (None, None, "undefined".to_owned()),
                Err(err) => return Err(err),
            };
            Ok(SpectrumRow {
                molecule: m.name.clone(),
                ordering: sw.model.label.clone(),
                epsilon: e,
                n,
                l,
                eps_nl,
                energy_ev,
                bound_class: class,
            })
        })
        .collect()
}

fn oracle_row(m: &MoleculeParams<f64>, model: &Model, e: f64, l: u32, n: u32) -> OracleRow {
    let mut row = OracleRow {
        molecule: m.name.clone(),
        n,
        l,
        epsilon: e,
        e_closed: None,
        e_oracle_pekeris: None,
        e_oracle_exact: None,
        pekeris_error: None,
        closed_vs_oracle_diff: None,
        grid_error: None,
        converged: false,
        error: None,
    };
    let run = |row: &mut OracleRow| -> Result<()> {
        let inp = SpectrumInputs::new(m.clone(), model.scheme, e, l)?.with_convention(model.convention);
        row.e_closed = Some(energy(&inp, n)?.energy);
        let solve = |mode| {
            let p = OracleProblem::new(m.clone(), model.scheme, e, l, mode)?.with_convention(model.convention);
            solve_level(&p, n, DEFAULT_TOL_EV)
        };
        let pk = solve(CentrifugalMode::Pekeris)?;
        row.e_oracle_pekeris = Some(pk.energy);
        row.grid_error = Some(pk.grid_error_estimate);
        row.converged = pk.converged;
        row.closed_vs_oracle_diff = row.e_closed.map(|c| (c - pk.energy).abs());
        let ex = solve(CentrifugalMode::Exact)?;
        row.e_oracle_exact = Some(ex.energy);
        row.pekeris_error = Some(ex.energy - pk.energy);
        row.converged &= ex.converged;
        Ok(())
    };
    if let Err(err) = run(&mut row) {
        row.error = Some(err.to_string());
    }
    row
}

/// Oracle comparison over the sweep, rows computed in parallel.
pub fn oracle_rows(a: &SweepArgs, reg: &Registry) -> Result<Vec<OracleRow>> {
    let sw = Sweep::parse(a, reg)?;
    let pts = sw.points();
    Ok(pts.par_iter().map(|&(m, e, l, n)| oracle_row(m, &sw.model, e, l, n)).collect())
}

pub fn wavefunction(a: &WaveArgs, reg: &Registry) -> Result<WaveOutput> {
    let m = reg.lookup(&a.molecule)?;
    let model = parse_model(&a.model)?;
    if a.points < 3 {
        return Err(Error::Config { location: "--points".into(), message: "need at least 3 points".into() });
    }
    let inp = SpectrumInputs::new(m.clone(), model.scheme, a.epsilon, a.l)?.with_convention(model.convention);
    let grid = grid_with_points(&m, a.points);
    let sol = psi(&inp, a.n, &grid)?;
    Ok(WaveOutput {
        header: WaveHeader {
            molecule: m.name.clone(),
            n: a.n,
            l: a.l,
            epsilon: a.epsilon,
            ordering: model.label,
            node_count: sol.node_count,
            norm: sol.norm,
        },
        r_angstrom: sol.grid,
        psi: sol.values,
    })
}

pub fn potential_rows(a: &PotentialArgs, reg: &Registry) -> Result<Vec<PotentialRow>> {
    let m = reg.lookup(&a.molecule)?;
    let model = parse_model(&a.model)?;
    let _: CentrifugalMode = a.centrifugal.parse()?;
    let (lo, hi) = match &a.r_range {
        Some(s) => parse_r_range(s)?,
        None => (1e-3, 4.0 * m.re),
    };
    if a.points < 2 {
        return Err(Error::Config { location: "--points".into(), message: "need at least 2 points".into() });
    }
    if !(0.0..1.0).contains(&a.epsilon) {
        return Err(Error::Config { location: "--epsilon".into(), message: format!("{} is outside [0, 1)", a.epsilon) });
    }
    let profile = MassProfile::for_molecule(&m, a.epsilon)?;
    let (c1, c2) = extra_potential_poly(&model.scheme, &profile);
    let k = model.convention.scale(&m);
    let pk = pekeris_coeffs(m.nu)?;
    (0..a.points)
        .map(|i| {
            let r = lo + (hi - lo) * i as f64 / (a.points - 1) as f64;
            let y = profile.y(r);
            let regular = 1.0 - a.epsilon * y > 0.0;
            Ok(PotentialRow {
                r_angstrom: r,
                v_morse_ev: m.morse_at(r),
                u_extra_ev: regular.then_some(k * (c1 * y + c2 * y * y)),
                v_rot_pekeris_ev: rotational_potential_at(&pk, a.l, &m, r, CentrifugalMode::Pekeris)?,
                v_rot_exact_ev: rotational_potential_at(&pk, a.l, &m, r, CentrifugalMode::Exact)?,
            })
        })
        .collect()
}

fn spectrum_text(rows: &[SpectrumRow], f: Format) -> String {
    match f {
        Format::Json => json(&rows),
        Format::Csv => csv(
            &["molecule", "ordering", "epsilon", "n", "l", "eps_nl", "E_eV", "bound_class"],
            rows.iter().map(|r| {
                vec![
                    r.molecule.clone(),
                    r.ordering.clone(),
                    sig9(r.epsilon),
                    r.n.to_string(),
                    r.l.to_string(),
                    opt9(r.eps_nl),
                    opt9(r.energy_ev),
                    r.bound_class.clone(),
                ]
            }),
        ),
    }
}

fn table_text(rep: &TableDiffReport, f: Format) -> String {
    match f {
        Format::Json => json(rep),
        Format::Csv => {
            let mut s = format!(
                "# table={} max_abs_diff={} tolerance={} passed={}\n",
                rep.table_id,
                sig9(rep.max_abs_diff),
                sig9(rep.tolerance),
                rep.passed
            );
            s.push_str(&csv(
                &["molecule", "n", "l", "epsilon", "printed_minus_E_eV", "computed_minus_E_eV", "abs_diff_eV"],
                rep.rows.iter().map(|r| {
                    vec![
                        r.molecule.clone(),
                        r.n.to_string(),
                        r.l.to_string(),
                        sig9(r.epsilon),
                        sig9(r.printed),
                        sig9(r.computed),
                        sig9(r.abs_diff),
                    ]
                }),
            ));
            s
        }
    }
}

fn wave_text(w: &WaveOutput, f: Format) -> String {
    match f {
        Format::Json => json(w),
        Format::Csv => {
            let h = &w.header;
            let mut s = format!(
                "# molecule={} n={} l={} epsilon={} ordering={} node_count={} norm={}\n",
                h.molecule,
                h.n,
                h.l,
                sig9(h.epsilon),
                h.ordering,
                h.node_count,
                sig9(h.norm)
            );
            s.push_str(&csv(
                &["r_angstrom", "psi"],
                w.r_angstrom.iter().zip(&w.psi).map(|(r, p)| vec![sig9(*r), sig9(*p)]),
            ));
            s
        }
    }
}

fn potential_text(rows: &[PotentialRow], f: Format) -> String {
    match f {
        Format::Json => json(&rows),
        Format::Csv => csv(
            &["r_angstrom", "V_morse_eV", "U_extra_eV", "V_rot_pekeris_eV", "V_rot_exact_eV"],
            rows.iter().map(|r| {
                vec![
                    sig9(r.r_angstrom),
                    sig9(r.v_morse_ev),
                    opt9(r.u_extra_ev),
                    sig9(r.v_rot_pekeris_ev),
                    sig9(r.v_rot_exact_ev),
                ]
            }),
        ),
    }
}

fn oracle_text(rows: &[OracleRow], f: Format) -> String {
    match f {
        Format::Json => json(&rows),
        Format::Csv => csv(
            &[
                "molecule",
                "n",
                "l",
                "epsilon",
                "E_closed",
                "E_oracle_pekeris",
                "E_oracle_exact",
                "pekeris_error",
                "closed_vs_oracle_diff",
                "grid_error",
                "converged",
                "error",
            ],
            rows.iter().map(|r| {
                vec![
                    r.molecule.clone(),
                    r.n.to_string(),
                    r.l.to_string(),
                    sig9(r.epsilon),
                    opt9(r.e_closed),
                    opt9(r.e_oracle_pekeris),
                    opt9(r.e_oracle_exact),
                    opt9(r.pekeris_error),
                    opt9(r.closed_vs_oracle_diff),
                    opt9(r.grid_error),
                    r.converged.to_string(),
                    r.error.clone().unwrap_or_default(),
                ]
            }),
        ),
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<()> {
    let io = |e: std::io::Error, at: &str| Error::Config { location: at.to_owned(), message: e.to_string() };
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|e| io(e, &path.display().to_string())),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| io(e, "stdout")),
    }
}

/// Runs a parsed command and returns its exit status.
pub fn execute(cmd: &Command) -> Result<i32> {
    let reg = Registry::from_env()?;
    match cmd {
        Command::Spectrum(a) => {
            emit(&a.output, &spectrum_text(&spectrum_rows(a, &reg)?, a.output.format))?;
            Ok(EXIT_OK)
        }
        Command::Table(a) => {
            let mut rep = table_report(a.id)?;
            if let Some(t) = a.tol {
                rep.tolerance = t;
                rep.passed = rep.max_abs_diff <= t;
            }
            emit(&a.output, &table_text(&rep, a.output.format))?;
            Ok(if rep.passed { EXIT_OK } else { EXIT_TOLERANCE })
        }
        Command::Wavefunction(a) => {
            emit(&a.output, &wave_text(&wavefunction(a, &reg)?, a.output.format))?;
            Ok(EXIT_OK)
        }
        Command::Potential(a) => {
            emit(&a.output, &potential_text(&potential_rows(a, &reg)?, a.output.format))?;
            Ok(EXIT_OK)
        }
        Command::Oracle(a) => {
            let rows = oracle_rows(a, &reg)?;
            emit(&a.output, &oracle_text(&rows, a.output.format))?;
            Ok(if rows.iter().all(|r| r.within(a.tol)) { EXIT_OK } else { EXIT_TOLERANCE })
        }
    }
}

/// Parses `args` and runs; errors go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..2", "n").unwrap(), 0..=2);
        assert_eq!(parse_range("4", "n").unwrap(), 4..=4);
        assert_eq!(parse_range("0..=3", "n").unwrap(), 0..=3);
        let err = parse_range("3..1", "l").unwrap_err();
        assert!(err.to_string().contains("--l"));
        assert!(parse_range("x", "n").is_err());
    }

    #[test]
    fn epsilons() {
        assert_eq!(parse_epsilons("0.4,0,0.1,0.4").unwrap(), vec![0.0, 0.1, 0.4]);
        assert!(parse_epsilons("1.0").is_err());
        assert!(parse_epsilons("-0.1").is_err());
    }

    #[test]
    fn r_range_rejects_nonpositive() {
        assert!(parse_r_range("0..3").is_err());
        assert!(parse_r_range("-1..3").is_err());
        assert_eq!(parse_r_range("0.5..3").unwrap(), (0.5, 3.0));
    }

    #[test]
    fn molecules_sorted() {
        let reg = Registry::builtin();
        let names: Vec<_> = select_molecules(&reg, "LiH,co").unwrap().into_iter().map(|m| m.name).collect();
        assert_eq!(names, ["CO", "LiH"]);
        assert!(select_molecules(&reg, "XeF").is_err());
    }
}

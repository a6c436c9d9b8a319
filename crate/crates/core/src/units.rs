//! Physical constants, the eV/Å unit system, and the molecule registry.
//!
//! All energies are in eV and all lengths in Å. Masses enter only through
//! `E0 = ħ²/(2 m0 re²)`; the tabulated `E0` is used as-is so that derived
//! scales never depend on the atomic-mass conversion factor.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_u32, lit, Real};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħc in eV·Å.
    pub hbar_c: f64,
    /// Rest energy of one atomic mass unit, eV.
    pub amu_to_ev: f64,
}

pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    hbar_c: 1973.29,
    amu_to_ev: 931.494e6,
};

/// Relative tolerance between the tabulated and the recomputed `E0`.
pub const E0_CONSISTENCY_TOL: f64 = 1e-4;

/// Parameters of one diatomic molecule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoleculeParams<T> {
    pub name: String,
    /// Dissociation energy `De` (eV).
    pub de: T,
    /// Equilibrium separation `re` (Å).
    pub re: T,
    /// Reduced mass (amu).
    pub m_amu: T,
    /// Dimensionless width `ν = b·re`.
    pub nu: T,
    /// `ħ²/(2 m0 re²)` (eV).
    pub e0: T,
}

impl<T: Real> MoleculeParams<T> {
    /// Builds a record, deriving `E0` from the constants when it is not given.
    pub fn new(name: &str, de: T, re: T, m_amu: T, nu: T, e0: Option<T>) -> Result<Self> {
        let positive = |v: T, what: &str| {
            if v > T::zero() && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{what} must be positive and finite, got {v}")))
            }
        };
        positive(de, "De")?;
        positive(re, "re")?;
        positive(m_amu, "m")?;
        positive(nu, "nu")?;
        let e0 = match e0 {
            Some(e0) => {
                positive(e0, "E0")?;
                e0
            }
            None => e0_from_constants(m_amu, re),
        };
        Ok(Self { name: name.to_owned(), de, re, m_amu, nu, e0 })
    }

    /// Inverse width `b = ν/re` (Å⁻¹).
    pub fn b(&self) -> T {
        self.nu / self.re
    }

    /// `A0 = ħ²b²/(2m0) = E0·ν²` (eV).
    pub fn a0(&self) -> T {
        self.e0 * self.nu * self.nu
    }

    /// `B0(l) = ħ² l(l+1)/(2 m0 re²) = E0·l(l+1)` (eV).
    pub fn b0(&self, l: u32) -> T {
        self.e0 * l_factor(l)
    }

    /// `2 m0/ħ²` in eV⁻¹·Å⁻², consistent with the stored `E0`.
    pub fn kinetic_scale(&self) -> T {
        T::one() / (self.e0 * self.re * self.re)
    }

    /// Rest energy `m0 c²` (eV) consistent with the stored `E0`.
    pub fn m0_ev(&self) -> T {
        let hc: T = lit(CONSTANTS.hbar_c);
        hc * hc / (lit::<T>(2.0) * self.e0 * self.re * self.re)
    }

    /// `E0` recomputed from ħc, the amu conversion and the reduced mass.
    pub fn e0_from_constants(&self) -> T {
        e0_from_constants(self.m_amu, self.re)
    }

    /// Relative deviation between the stored and the recomputed `E0`.
    pub fn e0_consistency(&self) -> T {
        ((self.e0_from_constants() - self.e0) / self.e0).abs()
    }

    /// `De·(e^{-2b(r-re)} − 2 e^{-b(r-re)})`.
    pub fn morse_at(&self, r: T) -> T {
        let y = (-(self.b()) * (r - self.re)).exp();
        self.de * (y * y - lit::<T>(2.0) * y)
    }

    pub fn cast<U: Real>(&self) -> MoleculeParams<U> {
        let c = |v: T| U::from_f64(v.to_f64().unwrap()).unwrap();
        MoleculeParams {
            name: self.name.clone(),
            de: c(self.de),
            re: c(self.re),
            m_amu: c(self.m_amu),
            nu: c(self.nu),
            e0: c(self.e0),
        }
    }
}

pub(crate) fn l_factor<T: Real>(l: u32) -> T {
    from_u32::<T>(l) * from_u32::<T>(l + 1)
}

fn e0_from_constants<T: Real>(m_amu: T, re: T) -> T {
    let hc: T = lit(CONSTANTS.hbar_c);
    let amu: T = lit(CONSTANTS.amu_to_ev);
    hc * hc / (lit::<T>(2.0) * m_amu * amu * re * re)
}

/// Scales derived from a molecule: `b`, `A0`, and `B0(l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scales<T> {
    pub b: T,
    pub a0: T,
    e0: T,
}

impl<T: Real> Scales<T> {
    pub fn b0(&self, l: u32) -> T {
        self.e0 * l_factor(l)
    }
}

pub fn derive_scales<T: Real>(p: &MoleculeParams<T>) -> Scales<T> {
    Scales { b: p.b(), a0: p.a0(), e0: p.e0 }
}

/// Built-in molecules: name, De (eV), re (Å), reduced mass (amu), ν, E0 (eV).
#[allow(clippy::approx_constant)]
const BUILTIN: [(&str, f64, f64, f64, f64, f64); 4] = [
    ("H2", 4.7446, 0.7416, 0.50391, 1.440558, 0.754171966e-2),
    ("LiH", 2.515287, 1.5956, 0.8801221, 1.7998368, 0.932764099e-3),
    ("HCl", 4.61907, 1.2746, 0.9801045, 2.38057, 1.312630806e-3),
    ("CO", 11.2256, 1.1283, 6.8606719, 2.59441, 2.393023577e-4),
];

/// Environment variable naming a directory of extra molecule files.
pub const MOLECULES_ENV: &str = "MORSEPDM_MOLECULES";

#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    entries: Vec<MoleculeParams<f64>>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl Registry {
    pub fn builtin() -> Self {
        let entries = BUILTIN
            .iter()
            .map(|&(name, de, re, m, nu, e0)| MoleculeParams { name: name.to_owned(), de, re, m_amu: m, nu, e0 })
            .collect();
        Self { entries }
    }

    /// Built-in molecules merged with every file in `$MORSEPDM_MOLECULES`.
    pub fn from_env() -> Result<Self> {
        let mut reg = Self::builtin();
        if let Some(dir) = std::env::var_os(MOLECULES_ENV) {
            reg.merge_dir(Path::new(&dir))?;
        }
        Ok(reg)
    }

    /// Inserts, or replaces an entry with the same name.
    pub fn insert(&mut self, p: MoleculeParams<f64>) {
        match self.entries.iter_mut().find(|e| e.name == p.name) {
            Some(slot) => *slot = p,
            None => self.entries.push(p),
        }
    }

    pub fn merge_dir(&mut self, dir: &Path) -> Result<()> {
        let io_err = |e: std::io::Error| Error::Config { location: dir.display().to_string(), message: e.to_string() };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io_err)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
            .collect();
        paths.sort();
        for path in paths {
            let text = std::fs::read_to_string(&path).map_err(io_err)?;
            self.insert(parse_molecule_config(&text, &path.display().to_string())?);
        }
        Ok(())
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MoleculeParams<f64>> {
        self.entries.iter()
    }

    pub fn lookup(&self, name: &str) -> Result<MoleculeParams<f64>> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .or_else(|| self.entries.iter().find(|e| e.name.eq_ignore_ascii_case(name)))
            .cloned()
            .ok_or_else(|| Error::UnknownMolecule { name: name.to_owned(), available: self.names().join(", ") })
    }
}

/// Looks a molecule up in the built-in registry.
pub fn registry_lookup(name: &str) -> Result<MoleculeParams<f64>> {
    Registry::builtin().lookup(name)
}

/// Parses a flat `key = value` molecule file.
///
/// Keys: `name`, `De_eV`, `re_angstrom`, `m_amu`, `nu`, and optionally `E0_eV`.
/// Blank lines and `#` comments are ignored.
pub fn parse_molecule_config(text: &str, source: &str) -> Result<MoleculeParams<f64>> {
    let mut name = None;
    let mut nums: [Option<f64>; 5] = [None; 5];
    const KEYS: [&str; 5] = ["De_eV", "re_angstrom", "m_amu", "nu", "E0_eV"];
    let cfg_err = |line: usize, message: String| Error::Config { location: format!("{source}:{line}"), message };

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| cfg_err(lineno, format!("expected `key = value`, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "name" {
            if value.is_empty() {
                return Err(cfg_err(lineno, "empty name".into()));
            }
            name = Some(value.trim_matches('"').to_owned());
            continue;
        }
        let slot = KEYS
            .iter()
            .position(|k| *k == key)
            .ok_or_else(|| cfg_err(lineno, format!("unknown key `{key}`")))?;
        let v: f64 = value.parse().map_err(|_| cfg_err(lineno, format!("`{key}` is not a number: `{value}`")))?;
        nums[slot] = Some(v);
    }

    let missing = |k: &str| Error::Config { location: source.to_owned(), message: format!("missing key `{k}`") };
    let name = name.ok_or_else(|| missing("name"))?;
    let mut req = [0.0; 4];
    for (i, v) in req.iter_mut().enumerate() {
        *v = nums[i].ok_or_else(|| missing(KEYS[i]))?;
    }
    MoleculeParams::new(&name, req[0], req[1], req[2], req[3], nums[4]).map_err(|e| Error::Config {
        location: source.to_owned(),
        message: e.to_string(),
    })
}

impl<T: Real> fmt::Display for MoleculeParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: De={} eV, re={} Å, m={} amu, nu={}, E0={} eV",
            self.name, self.de, self.re, self.m_amu, self.nu, self.e0
        )
    }
}

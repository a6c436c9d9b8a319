use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown molecule `{name}`; available: {available}")]
    UnknownMolecule { name: String, available: String },

    #[error("unknown ordering `{name}`; presets: weyl, li-kuhn, bendaniel-duke, zhu-kroemer, gora-williams, or an explicit `a,alpha,gamma` triple")]
    UnknownOrdering { name: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("mass is singular at r = {r} (epsilon * exp(-b (r - re)) = 1)")]
    SingularMass { r: f64 },

    #[error("no spectrum: gamma1 = {gamma1} <= 0")]
    NoSpectrum { gamma1: f64 },

    #[error("degenerate energy denominator 2 sqrt(gamma1) - (2n+1) epsilon at n = {n}")]
    DegenerateDenominator { n: u32 },

    #[error("no bound states: eps_nl(0) = {eps0} <= 0")]
    NoBoundStates { eps0: f64 },

    #[error("level n = {n} is not bound ({})", match n_max { Some(m) => format!("n_max = {m}"), None => "no bound levels".into() })]
    UnboundLevel { n: u32, n_max: Option<u32> },

    #[error("exponent S is complex: radicand = {radicand}")]
    ComplexExponent { radicand: f64 },

    #[error("level n = {n} is not normalizable: Jacobi parameter S = {s} <= 0")]
    NonNormalizable { n: u32, s: f64 },

    #[error("constant mass (epsilon = 0) has no Jacobi branch; use the Laguerre form")]
    ConstantMass,

    #[error("no level with {n} nodes below the threshold energy {threshold} eV")]
    NoSuchLevel { n: u32, threshold: f64 },

    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },
}

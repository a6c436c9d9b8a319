//! Bound states of diatomic molecules in a Morse potential with a
//! position-dependent mass `m(r) = m0 (1 − ε e^{−b(r−re)})^{−2}` under the
//! general von Roos kinetic ordering.
//!
//! The closed form lives in [`spectrum`] and [`wavefn`]; [`oracle`] is an
//! independent Numerov solver used to check it.

// `!(x > 0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod oracle;
pub mod ordering;
pub mod pekeris;
pub mod quad;
pub mod scalar;
pub mod special;
pub mod spectrum;
pub mod tables;
pub mod units;
pub mod wavefn;

pub use error::{Error, Result};
pub use ordering::{MassProfile, OrderingScheme, Preset};
pub use pekeris::{CentrifugalMode, PekerisCoeffs};
pub use scalar::Real;
pub use spectrum::{BoundClass, CouplingConvention, EnergyLevel, NmaxConvention, SpectrumInputs};
pub use units::{MoleculeParams, Registry};

use num_rational::Ratio;

pub type Molecule = MoleculeParams<f64>;
pub type Ordering = OrderingScheme<f64>;
pub type Spectrum = SpectrumInputs<f64>;
pub type Level = EnergyLevel<f64>;
pub type Oracle = oracle::OracleProblem<f64>;
pub type Molecule32 = MoleculeParams<f32>;
pub type Ordering32 = OrderingScheme<f32>;
pub type Spectrum32 = SpectrumInputs<f32>;
/// Ordering coefficients in exact rational arithmetic.
pub type ExactOrdering = OrderingScheme<Ratio<i64>>;
pub type ExactPekeris = PekerisCoeffs<Ratio<i64>>;

//! Exact generating series and lattice counts for curves on abelian surfaces and on
//! the threefold A x E.
//!
//! The library is organised bottom-up:
//!
//! - [`series`]: truncated q-series over rationals, Laurent polynomials in p^(1/2), or u-series
//! - [`modular`]: Eisenstein series, the theta function K in two forms, the Weierstrass
//!   function, the D4 theta series, and quasi-modular fitting
//! - [`lattice`]: the isogeny count nu via subgroup sums and isotropic subgroups
//! - [`surface`]: counts on abelian surfaces, including the hyperelliptic table
//! - [`threefold`]: Donaldson-Thomas series of A x E and the multiple-cover formulas
//! - [`verify`]: the named check registry behind `abelcount verify`

pub mod arith;
pub mod series;
pub mod modular;
pub mod lattice;
pub mod surface;
pub mod threefold;
pub mod verify;

use thiserror::Error;

/// Errors surfaced by the higher-level modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Fit(#[from] modular::FitError),
    #[error("table cell ({row}, {col}) = {value} is not an integer")]
    NonIntegerCell { row: i64, col: i64, value: String },
    #[error("window {given} is too small: at least {required} (doubled w-units) is needed")]
    WindowTooSmall { given: i64, required: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

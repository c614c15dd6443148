//! Hilbert functions of one-dimensional numerical semigroup rings and their
//! monomial maximal Cohen-Macaulay modules.
//!
//! A module is modelled by a relative ideal `E` of a numerical semigroup `S`;
//! `m^n M` has exponent set `nM + E` where `M = S \ {0}`, so every invariant
//! is exact integer combinatorics on cofinite subsets of `N`.

pub mod cli;
pub mod error;
pub mod explorer;
pub mod filtration;
pub mod fixture;
pub mod graded;
pub mod hilbert;
pub mod ideal;
pub mod semigroup;
pub mod valuation;

pub use error::{Error, Result};
pub use filtration::FiltrationTable;
pub use graded::{crosscheck_presentation, CrosscheckReport, MonomialIdeal};
pub use hilbert::{analyze, analyze_ring, HilbertData};
pub use ideal::RelativeIdeal;
pub use semigroup::{reduce_generators, NumericalSemigroup};
pub use valuation::ValuationSet;

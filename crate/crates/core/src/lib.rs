//! Exact distributions, characteristic functions and moments of rounded
//! random variables `X_α = ⌊X + α⌋ − α + 1`.

// argument guards are written `!(x > 0.0)` so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod model;
pub mod numeric;
pub mod oracle;
pub mod processes;
pub mod rounding;
pub mod series;
pub mod special_fn;

pub use error::{Error, Result};
pub use lattice::{tv_distance, LatticeDistribution};
pub use model::CharacteristicModel;
pub use series::{SeriesControl, SeriesTail, SummationMode};

//! Independent engines used to validate the Fourier-series results.

mod cumulants;
mod monte_carlo;
mod quadrature;

pub use cumulants::{cumulants_to_moments, moments_to_cumulants};
pub use monte_carlo::{
    mc_rounded_charfn, mc_rounded_moment, mc_rounded_stats, McComplexEstimate, McEstimate, McStats, DEFAULT_SEED,
    MC_CHUNK,
};
pub use quadrature::{cesaro_reference, default_window, quad_rounded_moment, QuadEstimate};

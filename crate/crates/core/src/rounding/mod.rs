//! Characteristic function, moment generating function, moments and law of the
//! rounded variable `X_α = ⌊X + α⌋ − α + 1`.

mod charfn;
mod distribution;
mod lattice_sum;
mod moments;
mod oscillation;
mod prodinger;

pub use charfn::{char_rounded, char_rounded_series, mgf_rounded, mgf_rounded_series, tilde_phi, window, REMOVABLE_RADIUS};
pub use distribution::{cdf_rounded, pmf_rounded, WINDOW_TAIL};
pub use lattice_sum::LatticeSeries;
pub use moments::{
    cumulant_shift, moment_rounded, sheppard_shift, var_rounded, var_rounded_decomposition, variance_profile,
    VarianceDecomposition,
};
pub use oscillation::{
    beta_m, beta_series, deriv_tilde_at_lattice, midpoint_grid, oscillation_profile, parseval_series,
    OscillationProfile,
};
pub use prodinger::{prodinger_coefficient, prodinger_parts, ProdingerParts};

pub(crate) use charfn::char_term;
pub(crate) use lattice_sum::laurent_mul;

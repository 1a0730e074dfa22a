//! Truncation control shared by every infinite sum in the crate.

use num_complex::Complex64;

/// How lattice sums over `n ∈ ℤ` are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SummationMode {
    /// Cesàro when the model's decay exponent is below one, adaptive otherwise.
    #[default]
    Auto,
    /// Symmetric partial sums stopped by an analytic tail bound.
    Adaptive,
    /// Fejér mean of order `fejer_n`.
    Cesaro,
}

/// Truncation, tolerance and Fejér parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub tol: f64,
    /// Cap on the lattice index `|n|`.
    pub n_max: usize,
    pub fejer_n: usize,
    pub mode: SummationMode,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            n_max: 1_000_000,
            fejer_n: 4096,
            mode: SummationMode::Auto,
        }
    }
}

impl SeriesControl {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn cesaro(fejer_n: usize) -> Self {
        Self {
            fejer_n,
            mode: SummationMode::Cesaro,
            ..Self::default()
        }
    }

    pub fn adaptive() -> Self {
        Self {
            mode: SummationMode::Adaptive,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> crate::Result<()> {
        if !(self.tol > 0.0) {
            return Err(crate::Error::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.fejer_n == 0 {
            return Err(crate::Error::InvalidArgument(
                "Fejér order must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Value of a truncated sum or product together with its truncation record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTail {
    pub value: Complex64,
    pub terms_used: usize,
    /// Bound on the neglected remainder. Absolute for lattice sums; relative to
    /// `|value|` for the special-function products and series.
    pub tail_bound: f64,
}

/// `Σ_{n>N} (2πn − s)^{−p}` bounded by the integral from `N`, valid when `2πN > s`.
pub(crate) fn power_tail(n: usize, shift: f64, p: f64) -> f64 {
    let base = 2.0 * std::f64::consts::PI * n as f64 - shift.abs();
    if base <= 0.0 || p <= 1.0 {
        return f64::INFINITY;
    }
    base.powf(1.0 - p) / (2.0 * std::f64::consts::PI * (p - 1.0))
}

//! Limit law of the Poissonized Patricia depth `Y_s − log₂ s`.

use std::sync::OnceLock;

use num_complex::Complex64;

use super::EXPONENTIAL_DECAY;
use crate::model::CharacteristicModel;
use crate::numeric::gauss_legendre;
use crate::processes::doubling_sum;
use crate::series::SeriesControl;
use crate::special_fn::{digamma, g_series, gamma_complex, EULER_GAMMA};
use crate::{Error, Result};

const LN2: f64 = std::f64::consts::LN_2;

/// Integration range for the Fourier transform of `F − 1_{x ≥ 0}`.
const FOURIER_RANGE: (f64, f64) = (-7.0, 14.0);
const PANEL: f64 = 0.25;
const NODES_PER_PANEL: usize = 20;

/// Only `φ(2πn)` and `φ′(2πn)` are available in closed form, so moments stop at
/// order two and lattice derivatives at order one.
#[derive(Debug, Clone, Copy, Default)]
pub struct PatriciaLimit;

/// Largest `|t|` at which φ is evaluated by quadrature.
pub const PHI_CUTOFF: f64 = 40.0;

/// `g(0) = Σ_k ln(1 + 2^{−k})`.
pub fn g_zero() -> f64 {
    let mut acc = 0.0;
    let mut h = 0.5f64;
    while h > 1e-20 {
        acc += h.ln_1p();
        h *= 0.5;
    }
    acc
}

impl PatriciaLimit {
    pub fn new() -> Self {
        Self
    }

    pub fn mean() -> f64 {
        EULER_GAMMA / LN2 - 1.0
    }

    pub fn second_moment() -> f64 {
        let gamma2 = EULER_GAMMA * EULER_GAMMA + std::f64::consts::PI.powi(2) / 6.0;
        gamma2 / (LN2 * LN2) - 2.0 * EULER_GAMMA / LN2 + 1.0 - 2.0 * g_zero() / LN2
    }

    /// `π²/(6 ln²2) − 2 g(0)/ln 2`.
    pub fn variance() -> f64 {
        std::f64::consts::PI.powi(2) / (6.0 * LN2 * LN2) - 2.0 * g_zero() / LN2
    }

    /// `F(x) = Σ_{m≥0} B_m(2^{m−1−x}) e^{−2^{m−1−x}}` with `B_m(s) = P(Y_s = m)`.
    pub fn distribution_function(x: f64) -> f64 {
        let s0 = 2f64.powf(-1.0 - x);
        if s0 > 800.0 {
            return 0.0;
        }
        doubling_sum(s0, None).map(|v| v.clamp(0.0, 1.0)).unwrap_or(f64::NAN)
    }

    /// Gauss nodes, weights and `F − 1_{x≥0}` at the nodes, built once.
    fn fourier_table() -> &'static Vec<(f64, f64)> {
        static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
        TABLE.get_or_init(|| {
            let (nodes, weights) = gauss_legendre(NODES_PER_PANEL);
            let panels = ((FOURIER_RANGE.1 - FOURIER_RANGE.0) / PANEL).round() as usize;
            let mut out = Vec::with_capacity(panels * NODES_PER_PANEL);
            for p in 0..panels {
                let a = FOURIER_RANGE.0 + p as f64 * PANEL;
                for (xi, wi) in nodes.iter().zip(&weights) {
                    let x = a + 0.5 * PANEL * (xi + 1.0);
                    let h = if x >= 0.0 { 1.0 } else { 0.0 };
                    out.push((x, 0.5 * PANEL * wi * (Self::distribution_function(x) - h)));
                }
            }
            out
        })
    }
}

impl CharacteristicModel for PatriciaLimit {
    fn name(&self) -> String {
        "patricia".into()
    }

    /// `φ(t) = 1 − it ∫ e^{itx} (F(x) − 1_{x≥0}) dx`.
    /// Beyond `|t| = PHI_CUTOFF` the transform is below 1e-29 (it decays like
    /// `e^{−π|t|/(2 ln 2)}`), while the panel rule can no longer resolve `e^{itx}`.
    fn phi(&self, t: f64) -> Result<Complex64> {
        if t.abs() > PHI_CUTOFF {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for &(x, wf) in Self::fourier_table() {
            acc += wf * Complex64::from_polar(1.0, t * x);
        }
        Ok(1.0 - Complex64::new(0.0, t) * acc)
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        if order > 1 {
            return Err(Error::InsufficientOrder {
                model: self.name(),
                requested: order,
                max: 1,
            });
        }
        let w = std::f64::consts::TAU * n as f64 / LN2;
        let z = Complex64::new(1.0, -w);
        let g = gamma_complex(z)?;
        let mut out = vec![g];
        if order == 1 {
            let mut dpsi = -g - g * digamma(z)? / LN2;
            if n != 0 {
                let gz = g_series(Complex64::new(0.0, -w), &SeriesControl::with_tol(1e-15))?.value;
                dpsi -= Complex64::new(0.0, w) * gz;
            }
            out.push(Complex64::new(0.0, 1.0) * dpsi);
        }
        Ok(out)
    }

    fn decay_exponent(&self) -> f64 {
        EXPONENTIAL_DECAY
    }

    fn max_moment_order(&self) -> usize {
        2
    }

    fn raw_moments(&self) -> Vec<f64> {
        vec![Self::mean(), Self::second_moment()]
    }

    fn cdf(&self, x: f64) -> Option<f64> {
        Some(Self::distribution_function(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert!((PatriciaLimit::mean() + 0.16725382272).abs() < 1e-10);
        assert!((PatriciaLimit::variance() - 0.916666666667904).abs() < 1e-12);
        assert!((g_zero() - 0.86887665).abs() < 5e-9);
    }

    #[test]
    fn cdf_bounds() {
        for k in -40..=60 {
            let x = k as f64 * 0.25;
            let f = PatriciaLimit::distribution_function(x);
            assert!(f >= (-(2f64.powf(-x))).exp() - 1e-15, "x={x}");
            assert!(f <= 1.0);
        }
        assert!(1.0 - PatriciaLimit::distribution_function(12.0) < 1e-12);
    }

    #[test]
    fn fourier_matches_lattice_values() {
        let m = PatriciaLimit::new();
        assert!((m.phi(0.0).unwrap() - 1.0).norm() < 1e-14);
        for n in 1..=2 {
            let t = std::f64::consts::TAU * n as f64;
            let a = m.phi(t).unwrap();
            let b = m.phi_lattice(n, 0).unwrap()[0];
            assert!((a - b).norm() < 1e-12, "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn derivative_at_zero_is_mean() {
        let d = PatriciaLimit::new().phi_lattice(0, 1).unwrap()[1];
        assert!((d.im - PatriciaLimit::mean()).abs() < 1e-14 && d.re.abs() < 1e-15);
    }
}

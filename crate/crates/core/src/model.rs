//! The contract every continuous random variable X must satisfy to be rounded.

use num_complex::Complex64;
use rand::RngCore;

use crate::{Error, Result};

/// Description of a continuous random variable through its transforms.
///
/// `phi(t) = E e^{itX}`; `psi(t) = E e^{tX}` on the strip `a < Re t < b`.
/// Lattice data are indexed by `n` and refer to the points `t = 2πn`.
pub trait CharacteristicModel: Send + Sync + std::fmt::Debug {
    fn name(&self) -> String;

    fn phi(&self, t: f64) -> Result<Complex64>;

    /// `φ(2πn), φ′(2πn), …, φ^{(order)}(2πn)`.
    ///
    /// The default differentiates ψ numerically on a circle around `2πin`.
    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        cauchy_phi_lattice(self, n, order)
    }

    fn has_psi(&self) -> bool {
        false
    }

    fn psi(&self, _t: Complex64) -> Result<Complex64> {
        Err(Error::NoMgf(self.name()))
    }

    /// `(a, b)` with `a < 0 < b`; meaningless without ψ.
    fn strip(&self) -> (f64, f64) {
        (0.0, 0.0)
    }

    /// δ in `D^k φ(t) = O(|t|^{−δ})`.
    fn decay_exponent(&self) -> f64;

    fn max_moment_order(&self) -> usize;

    /// `EX, EX², …, EX^{max_moment_order}`.
    fn raw_moments(&self) -> Vec<f64>;

    fn cdf(&self, _x: f64) -> Option<f64> {
        None
    }

    /// `P(X > x)`; overridden where `1 − F` would lose relative accuracy.
    fn sf(&self, x: f64) -> Option<f64> {
        self.cdf(x).map(|f| 1.0 - f)
    }

    fn density(&self, _x: f64) -> Option<f64> {
        None
    }

    fn sample(&self, _rng: &mut dyn RngCore) -> Option<f64> {
        None
    }

    /// Laurent coefficients of ψ and its derivatives on the lattice:
    /// `ψ^{(r)}(2πin) ≈ Σ_j c[r][j] (2πin)^{−j}` for every `n ≠ 0`, `r ≤ order`,
    /// with real `c[r][j]`. Either exact or asymptotic as `|n| → ∞`.
    fn lattice_laurent(&self, _order: usize) -> Option<Vec<Vec<f64>>> {
        None
    }

    fn has_cdf(&self) -> bool {
        self.cdf(0.0).is_some()
    }
}

/// Number of nodes on the differentiation circle.
const CAUCHY_NODES: usize = 64;

/// `φ^{(k)}(2πn)` for `k ≤ order` from the trapezoid rule applied to
/// `ψ^{(k)}(z₀) = k!/(2πi) ∮ ψ(z)(z − z₀)^{−k−1} dz` with `z₀ = 2πin`.
pub fn cauchy_phi_lattice<M: CharacteristicModel + ?Sized>(
    model: &M,
    n: i64,
    order: usize,
) -> Result<Vec<Complex64>> {
    if !model.has_psi() {
        return Err(Error::InsufficientOrder {
            model: model.name(),
            requested: order,
            max: 0,
        });
    }
    let (a, b) = model.strip();
    let radius = 0.5 * 1f64.min(b).min(-a);
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "model `{}` declares a strip that misses the imaginary axis",
            model.name()
        )));
    }
    let z0 = Complex64::new(0.0, std::f64::consts::TAU * n as f64);
    let mut samples = Vec::with_capacity(CAUCHY_NODES);
    for j in 0..CAUCHY_NODES {
        let theta = std::f64::consts::TAU * j as f64 / CAUCHY_NODES as f64;
        samples.push((theta, model.psi(z0 + Complex64::from_polar(radius, theta))?));
    }
    let mut out = Vec::with_capacity(order + 1);
    let mut fact = 1.0;
    let i = Complex64::new(0.0, 1.0);
    for k in 0..=order {
        if k > 0 {
            fact *= k as f64;
        }
        let mean: Complex64 = samples
            .iter()
            .map(|&(theta, v)| v * Complex64::from_polar(1.0, -(k as f64) * theta))
            .sum::<Complex64>()
            / CAUCHY_NODES as f64;
        let psi_k = mean * fact / radius.powi(k as i32);
        out.push(i.powi(k as i32) * psi_k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Standard exponential: ψ(t) = 1/(1 − t).
    #[derive(Debug)]
    struct Exp1;

    impl CharacteristicModel for Exp1 {
        fn name(&self) -> String {
            "exp1".into()
        }
        fn phi(&self, t: f64) -> Result<Complex64> {
            Ok(1.0 / Complex64::new(1.0, -t))
        }
        fn has_psi(&self) -> bool {
            true
        }
        fn psi(&self, t: Complex64) -> Result<Complex64> {
            Ok(1.0 / (1.0 - t))
        }
        fn strip(&self) -> (f64, f64) {
            (f64::NEG_INFINITY, 1.0)
        }
        fn decay_exponent(&self) -> f64 {
            1.0
        }
        fn max_moment_order(&self) -> usize {
            2
        }
        fn raw_moments(&self) -> Vec<f64> {
            vec![1.0, 2.0]
        }
    }

    #[test]
    fn cauchy_derivatives_of_exponential() {
        let n = 2;
        let d = Exp1.phi_lattice(n, 4).unwrap();
        let i = Complex64::new(0.0, 1.0);
        let t = std::f64::consts::TAU * n as f64;
        let mut fact = 1.0;
        for (k, v) in d.iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            // φ^{(k)}(t) = k! i^k (1 − it)^{−k−1}
            let want = fact * i.powi(k as i32) / Complex64::new(1.0, -t).powi(k as i32 + 1);
            assert!((v - want).norm() < 1e-10 * want.norm(), "k={k}");
        }
    }
}

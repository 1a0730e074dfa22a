//! Sums of independent Bernoulli variables, in particular the Poissonized
//! Patricia depth `Y_s = Σ_k Be(1 − e^{−s/2^k})`.

use crate::lattice::LatticeDistribution;
use crate::series::SeriesControl;
use crate::{Error, Result};

/// Success probabilities of independent Bernoulli indicators; the sum of the
/// probabilities that were cut off is kept in `dropped_mass`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliProfile {
    pub success_probs: Vec<f64>,
    pub dropped_mass: f64,
}

impl BernoulliProfile {
    /// Indicators `Be(1 − e^{−s/2^k})`, `k ≥ 1`, truncated once the remaining
    /// expected count `Σ_{k>K} (1 − e^{−s/2^k}) < s 2^{−K}` is below `cutoff`.
    pub fn patricia(s: f64, cutoff: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::InvalidArgument(format!("Poisson parameter {s} must be positive")));
        }
        let mut probs = Vec::new();
        let mut k = 1;
        loop {
            let x = s * 0.5f64.powi(k);
            probs.push(-(-x).exp_m1());
            if x < cutoff {
                return Ok(Self {
                    success_probs: probs,
                    dropped_mass: x,
                });
            }
            k += 1;
        }
    }

    pub fn mean(&self) -> f64 {
        self.success_probs.iter().sum()
    }

    /// Exact law of the sum, by repeated convolution.
    pub fn distribution(&self) -> Result<LatticeDistribution> {
        let mut pmf = vec![1.0];
        for &p in &self.success_probs {
            convolve_bernoulli(&mut pmf, p);
        }
        LatticeDistribution::new(0.0, 0, pmf)
    }
}

/// Replaces the law `pmf` by that of `pmf + Be(p)`.
pub fn convolve_bernoulli(pmf: &mut Vec<f64>, p: f64) {
    pmf.push(0.0);
    for k in (0..pmf.len()).rev() {
        let below = if k > 0 { pmf[k - 1] } else { 0.0 };
        pmf[k] = pmf[k] * (1.0 - p) + below * p;
    }
}

/// Law of `Y_s`; indicators beyond the point where the neglected expected count
/// falls below `ctrl.tol · 1e-3` are dropped.
pub fn patricia_poisson(s: f64, ctrl: &SeriesControl) -> Result<LatticeDistribution> {
    ctrl.validate()?;
    BernoulliProfile::patricia(s, (ctrl.tol * 1e-3).min(1e-15))?.distribution()
}

/// `m(s) = E Y_s = Σ_{k≥1} (1 − e^{−s/2^k})`.
pub fn patricia_mean(s: f64) -> f64 {
    let mut acc = 0.0;
    let mut x = s * 0.5;
    while x > 1e-18 {
        acc += -(-x).exp_m1();
        x *= 0.5;
    }
    acc + x
}

/// `Σ_m B_m(s_m) e^{−s_m}` over `s_m = s₀ 2^m`, `m = 0..=m_last`, where
/// `B_m(s) = P(Y_s = m)`. Uses `Y_{2s} = Y_s + Be(1 − e^{−s})` to move from one
/// `s_m` to the next.
pub fn doubling_sum(s0: f64, m_last: Option<usize>) -> Result<f64> {
    let mut pmf = BernoulliProfile::patricia(s0, 1e-18)?.distribution()?.probs_from_zero();
    let mut s = s0;
    let mut acc = 0.0;
    let mut m = 0usize;
    loop {
        let weight = (-s).exp();
        let b = pmf.get(m).copied().unwrap_or(0.0);
        acc += b * weight;
        if m_last.is_some_and(|last| m >= last) || (m_last.is_none() && s > 800.0) {
            return Ok(acc);
        }
        convolve_bernoulli(&mut pmf, -(-s).exp_m1());
        s *= 2.0;
        m += 1;
    }
}

impl LatticeDistribution {
    /// Masses at `0, 1, 2, …` for an integer-valued law with `j_min ≥ 0`.
    pub(crate) fn probs_from_zero(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.j_min.max(0) as usize];
        v.extend_from_slice(&self.probs);
        v
    }
}

/// `P(Y_s ≤ k) = Σ_{m=0}^{k} B_m(s/2^{k+1−m}) e^{−s/2^{k+1−m}}`.
pub fn patricia_cdf_identity(s: f64, k: usize) -> Result<f64> {
    doubling_sum(s * 0.5f64.powi(k as i32 + 1), Some(k))
}

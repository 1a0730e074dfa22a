//! Sums over the frequency lattice `n ∈ ℤ ∖ {0}` with conjugate-symmetric terms.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::series::{power_tail, SeriesControl, SummationMode};
use crate::special_fn::bernoulli_polynomial;
use crate::{Error, Result};

/// Terms are generated in blocks of this many indices.
pub(crate) const BLOCK: usize = 16;

/// Lattice sums resolved to a concrete strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Strategy {
    Adaptive,
    Cesaro(usize),
}

/// `Auto` picks Fejér means when the declared decay is below one (and no
/// closed-form tail is available); explicit adaptive summation needs δ > 0.
pub(crate) fn resolve(ctrl: &SeriesControl, model: &str, decay: f64, has_tail: bool) -> Result<Strategy> {
    ctrl.validate()?;
    match ctrl.mode {
        SummationMode::Cesaro => Ok(Strategy::Cesaro(ctrl.fejer_n)),
        SummationMode::Adaptive => {
            if decay <= 0.0 && !has_tail {
                Err(Error::NeedsCesaro {
                    model: model.to_string(),
                    decay,
                })
            } else {
                Ok(Strategy::Adaptive)
            }
        }
        SummationMode::Auto => {
            if decay < 1.0 && !has_tail {
                Ok(Strategy::Cesaro(ctrl.fejer_n))
            } else {
                Ok(Strategy::Adaptive)
            }
        }
    }
}

/// `e^{2πinα}` with the product `nα` reduced mod 1 before scaling.
pub(crate) fn phase(n: i64, alpha: f64) -> Complex64 {
    let x = (n as f64 * alpha).rem_euclid(1.0);
    Complex64::from_polar(1.0, std::f64::consts::TAU * x)
}

/// `Σ_{n≠0} e^{2πinx} (2πin)^{−k}` for `x ∈ [0, 1)`.
pub(crate) fn bernoulli_sum(k: usize, x: f64) -> f64 {
    match k {
        0 => -1.0,
        1 => {
            if x == 0.0 {
                0.0
            } else {
                0.5 - x
            }
        }
        _ => {
            let fact: f64 = (1..=k).map(|j| j as f64).product();
            -bernoulli_polynomial(k, x) / fact
        }
    }
}

/// `S(α) = Σ_{n≠0} τ_n e^{2πinα}` for terms with `τ_{−n} = conj(τ_n)`, stored as
/// the residuals `τ_n − Σ_k a_k (2πin)^{−k}` for `n = 1..=N` plus the real
/// Laurent coefficients `a_k`, whose lattice sums are Bernoulli polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSeries {
    coeffs: Vec<Complex64>,
    laurent: Vec<f64>,
    pub terms_used: usize,
    /// Absolute bound on the omitted part of `S`. Under Fejér summation this
    /// is the size of the upper half of the window instead.
    pub tail_bound: f64,
}

impl LatticeSeries {
    pub fn eval(&self, alpha: f64) -> f64 {
        let a = alpha.rem_euclid(1.0);
        let mut s = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            s += (c * phase(k as i64 + 1, a)).re;
        }
        let mut v = 2.0 * s;
        for (k, &ak) in self.laurent.iter().enumerate().skip(1) {
            if ak != 0.0 {
                v += ak * bernoulli_sum(k, a);
            }
        }
        v
    }

    /// Lattice coefficient `τ_n` reassembled from residual and Laurent part.
    pub fn coefficient(&self, n: i64) -> Complex64 {
        assert!(n != 0);
        let k = n.unsigned_abs() as usize;
        let u = Complex64::new(0.0, std::f64::consts::TAU * k as f64);
        let mut c = self.coeffs.get(k - 1).copied().unwrap_or_default();
        for (j, &a) in self.laurent.iter().enumerate().skip(1) {
            c += a * u.powi(-(j as i32));
        }
        if n < 0 {
            c.conj()
        } else {
            c
        }
    }
}

/// Evaluates `term(n)` for `n ≥ 1` and builds a [`LatticeSeries`].
///
/// Adaptive mode stops after the first block whose estimate
/// `C Σ_{|n|>N} (2π|n|)^{−p}` (with `C` taken from that block) is below `tol`.
pub(crate) fn build<F>(term: F, laurent: Option<Vec<f64>>, decay_p: f64, strategy: Strategy, ctrl: &SeriesControl) -> Result<LatticeSeries>
where
    F: Fn(i64) -> Result<Complex64> + Sync,
{
    match strategy {
        Strategy::Cesaro(n_fejer) => {
            let raw: Vec<Complex64> = (1..=n_fejer as i64).into_par_iter().map(&term).collect::<Result<_>>()?;
            let w = (n_fejer + 1) as f64;
            let coeffs: Vec<Complex64> = raw
                .iter()
                .enumerate()
                .map(|(k, c)| c * (1.0 - (k + 1) as f64 / w))
                .collect();
            let tail_bound = 2.0 * raw[n_fejer / 2..].iter().map(|c| c.norm()).sum::<f64>();
            Ok(LatticeSeries {
                coeffs,
                laurent: Vec::new(),
                terms_used: n_fejer,
                tail_bound,
            })
        }
        Strategy::Adaptive => {
            let laurent = laurent.unwrap_or_default();
            let residual = |n: i64| -> Result<Complex64> {
                let mut c = term(n)?;
                if !laurent.is_empty() {
                    let u = Complex64::new(0.0, std::f64::consts::TAU * n as f64);
                    for (j, &a) in laurent.iter().enumerate().skip(1) {
                        c -= a * u.powi(-(j as i32));
                    }
                }
                Ok(c)
            };
            let mut coeffs = Vec::new();
            loop {
                let lo = coeffs.len() as i64 + 1;
                let hi = lo + BLOCK as i64 - 1;
                let block: Vec<Complex64> = (lo..=hi).into_par_iter().map(&residual).collect::<Result<_>>()?;
                let c_est = block
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.norm() * (std::f64::consts::TAU * (lo + k as i64) as f64).powf(decay_p))
                    .fold(0.0, f64::max);
                coeffs.extend(block);
                let n = coeffs.len();
                let tail = if c_est == 0.0 { 0.0 } else { 2.0 * c_est * power_tail(n, 0.0, decay_p) };
                if tail <= ctrl.tol {
                    return Ok(LatticeSeries {
                        coeffs,
                        laurent,
                        terms_used: n,
                        tail_bound: tail,
                    });
                }
                if n >= ctrl.n_max {
                    return Err(Error::NotConverged {
                        terms: n,
                        tail_bound: tail,
                    });
                }
            }
        }
    }
}

/// Product of two polynomials in `u^{−1}`.
pub(crate) fn laurent_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0.0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn laurent_add(acc: &mut Vec<f64>, a: &[f64], scale: f64) {
    if acc.len() < a.len() {
        acc.resize(a.len(), 0.0);
    }
    for (k, &x) in a.iter().enumerate() {
        acc[k] += scale * x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_sums_match_direct_series() {
        // Σ_{n≠0} e^{2πinx}/(2πin)^2 = −Σ 2cos(2πnx)/(2πn)^2
        for &x in &[0.0, 0.25, 0.7] {
            let direct: f64 = (1..200_000)
                .map(|n| -2.0 * (std::f64::consts::TAU * n as f64 * x).cos() / (std::f64::consts::TAU * n as f64).powi(2))
                .sum();
            // truncation error of the direct sum is below 1/(2π² · 2·10⁵)
            assert!((bernoulli_sum(2, x) - direct).abs() < 3e-7);
        }
    }

    #[test]
    fn exact_laurent_leaves_zero_residual() {
        let ctrl = SeriesControl::default();
        let a = vec![0.0, 0.0, 1.0];
        let s = build(
            |n| Ok(Complex64::new(0.0, std::f64::consts::TAU * n as f64).powi(-2)),
            Some(a),
            4.0,
            Strategy::Adaptive,
            &ctrl,
        )
        .unwrap();
        assert_eq!(s.terms_used, BLOCK);
        assert!((s.eval(0.0) + 1.0 / 12.0).abs() < 1e-15);
    }
}

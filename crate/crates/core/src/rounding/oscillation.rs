use num_complex::Complex64;
use rayon::prelude::*;

use super::lattice_sum::{build, laurent_add, laurent_mul, resolve, LatticeSeries};
use crate::model::CharacteristicModel;
use crate::series::SeriesControl;
use crate::special_fn::{f_derivatives_lattice, lattice_laurent};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn binomial(m: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (m - j) as f64 / (j + 1) as f64)
}

fn check_order(model: &dyn CharacteristicModel, m: usize) -> Result<()> {
    let max = model.max_moment_order();
    if m > max {
        return Err(Error::InsufficientOrder {
            model: model.name(),
            requested: m,
            max,
        });
    }
    Ok(())
}

/// `D^m w̃(2πn) = Σ_{k=1}^{m} C(m,k) w^{(k)}(2πn) φ^{(m−k)}(2πn)`; the `k = 0`
/// term drops because `w(2πn) = 0`.
pub fn deriv_tilde_at_lattice(model: &dyn CharacteristicModel, m: usize, n: i64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("lattice index must be nonzero".into()));
    }
    check_order(model, m)?;
    if m == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let phi = model.phi_lattice(n, m - 1)?;
    let f = f_derivatives_lattice(n, m);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=m {
        // w^{(k)}(t) = i^k f^{(k)}(it)
        acc += binomial(m, k) * I.powi(k as i32) * f[k] * phi[m - k];
    }
    Ok(acc)
}

/// Laurent coefficients of `i^{−m} D^m w̃(2πn) = Σ_k C(m,k) f^{(k)}(u) ψ^{(m−k)}(u)`
/// in `u = 2πin`, together with the order up to which they are complete.
fn beta_laurent(psi: &[Vec<f64>], m: usize) -> (Vec<f64>, usize) {
    let p = lattice_laurent(m);
    let mut acc = Vec::new();
    for k in 1..=m {
        laurent_add(&mut acc, &laurent_mul(&p[k], &psi[m - k]), binomial(m, k));
    }
    let complete = psi[..m].iter().map(|c| c.len() - 1).min().unwrap_or(0) + 1;
    (acc, complete)
}

/// The Fourier series of `β_m`, evaluated once and reusable across α.
pub fn beta_series(model: &dyn CharacteristicModel, m: usize, ctrl: &SeriesControl) -> Result<LatticeSeries> {
    if m == 0 {
        return Err(Error::InvalidArgument("β_m needs m ≥ 1".into()));
    }
    check_order(model, m)?;
    let laurent = model.lattice_laurent(m - 1).map(|c| beta_laurent(&c, m));
    let strategy = resolve(ctrl, &model.name(), model.decay_exponent(), laurent.is_some())?;
    let (coeffs, p) = match laurent {
        Some((a, complete)) => (Some(a), complete as f64 + 1.0),
        None => (None, 1.0 + model.decay_exponent()),
    };
    let im = I.powi(-(m as i32));
    build(
        |n| Ok(im * deriv_tilde_at_lattice(model, m, n)?),
        coeffs,
        p,
        strategy,
        ctrl,
    )
}

/// `β_m(α) = Σ_{n≠0} i^{−m} D^m w̃(2πn) e^{2πinα}`.
pub fn beta_m(model: &dyn CharacteristicModel, m: usize, alpha: f64, ctrl: &SeriesControl) -> Result<f64> {
    Ok(beta_series(model, m, ctrl)?.eval(alpha))
}

/// `Σ_{n≠0} |φ(2πn)|² / (2πn)²`, which equals `∫₀¹ β₁(α)² dα`.
pub fn parseval_series(model: &dyn CharacteristicModel, ctrl: &SeriesControl) -> Result<LatticeSeries> {
    let laurent = model.lattice_laurent(0).map(|c| {
        let c0 = &c[0];
        let reflected: Vec<f64> = c0
            .iter()
            .enumerate()
            .map(|(j, &x)| if j % 2 == 0 { x } else { -x })
            .collect();
        // |φ|²/(2πn)² = −ψ(u) ψ(−u) / u²
        let prod = laurent_mul(c0, &reflected);
        let mut shifted = vec![0.0, 0.0];
        shifted.extend(prod.iter().map(|x| -x));
        (shifted, c0.len() - 1 + 2)
    });
    let strategy = resolve(ctrl, &model.name(), model.decay_exponent(), laurent.is_some())?;
    let (coeffs, p) = match laurent {
        Some((a, complete)) => (Some(a), complete as f64 + 1.0),
        None => (None, 2.0 + 2.0 * model.decay_exponent()),
    };
    build(
        |n| {
            let phi = model.phi_lattice(n, 0)?[0];
            let t = std::f64::consts::TAU * n as f64;
            Ok(Complex64::new(phi.norm_sqr() / (t * t), 0.0))
        },
        coeffs,
        p,
        strategy,
        ctrl,
    )
}

/// `(k + 1/2)/K` for `k = 0..K`.
pub fn midpoint_grid(k: usize) -> Vec<f64> {
    (0..k).map(|j| (j as f64 + 0.5) / k as f64).collect()
}

/// `β_m` sampled on an α-grid.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillationProfile {
    pub order: usize,
    pub alphas: Vec<f64>,
    pub values: Vec<f64>,
    pub truncation_n: usize,
}

impl OscillationProfile {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

pub fn oscillation_profile(model: &dyn CharacteristicModel, m: usize, alphas: &[f64], ctrl: &SeriesControl) -> Result<OscillationProfile> {
    let series = beta_series(model, m, ctrl)?;
    let values = alphas.par_iter().map(|&a| series.eval(a)).collect();
    Ok(OscillationProfile {
        order: m,
        alphas: alphas.iter().map(|a| a.rem_euclid(1.0)).collect(),
        values,
        truncation_n: series.terms_used,
    })
}

use rayon::prelude::*;

use super::oscillation::{beta_series, parseval_series};
use crate::model::CharacteristicModel;
use crate::series::SeriesControl;
use crate::special_fn::bernoulli_number;
use crate::{Error, Result};

fn binomial(m: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (m - j) as f64 / (j + 1) as f64)
}

fn check_len(len: usize, m: usize) -> Result<()> {
    if m == 0 || m > len {
        return Err(Error::InvalidArgument(format!("order {m} needs 1 ≤ m ≤ {len}")));
    }
    Ok(())
}

/// `E(X + U)^m = Σ_j C(m,j) EX^j / (m − j + 1)` from `raw[j−1] = EX^j`.
pub fn sheppard_shift(raw: &[f64], m: usize) -> Result<f64> {
    check_len(raw.len(), m)?;
    let mut acc = 1.0 / (m + 1) as f64;
    for j in 1..=m {
        acc += binomial(m, j) * raw[j - 1] / (m - j + 1) as f64;
    }
    Ok(acc)
}

/// `κ_m(X + U) = κ_m(X) + B_m/m` for `m ≥ 2`, and `κ_1 + 1/2`.
pub fn cumulant_shift(cumulants: &[f64], m: usize) -> Result<f64> {
    check_len(cumulants.len(), m)?;
    if m == 1 {
        Ok(cumulants[0] + 0.5)
    } else {
        Ok(cumulants[m - 1] + bernoulli_number(m) / m as f64)
    }
}

/// `E X_α^m = E(X + U)^m + β_m(α)`.
pub fn moment_rounded(model: &dyn CharacteristicModel, m: usize, alpha: f64, ctrl: &SeriesControl) -> Result<f64> {
    let base = sheppard_shift(&model.raw_moments(), m)?;
    Ok(base + beta_series(model, m, ctrl)?.eval(alpha))
}

/// `Var X_α = Var X + 1/12 − P + β̃₂(α)` with the Parseval sum
/// `P = Σ_{n≠0} |φ(2πn)|²/(2πn)²` and
/// `β̃₂ = β₂ − (2EX + 1) β₁ − β₁² + P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceDecomposition {
    pub alpha: f64,
    pub var_x: f64,
    pub parseval: f64,
    pub beta_1: f64,
    pub beta_2: f64,
    pub beta_tilde_2: f64,
    pub value: f64,
}

fn prepare(model: &dyn CharacteristicModel) -> Result<(f64, f64)> {
    if model.max_moment_order() < 2 {
        return Err(Error::InsufficientOrder {
            model: model.name(),
            requested: 2,
            max: model.max_moment_order(),
        });
    }
    let raw = model.raw_moments();
    Ok((raw[0], raw[1] - raw[0] * raw[0]))
}

/// Variance decompositions on an α-grid, sharing the lattice series.
pub fn variance_profile(model: &dyn CharacteristicModel, alphas: &[f64], ctrl: &SeriesControl) -> Result<Vec<VarianceDecomposition>> {
    let (ex, var_x) = prepare(model)?;
    let b1 = beta_series(model, 1, ctrl)?;
    let b2 = beta_series(model, 2, ctrl)?;
    let parseval = parseval_series(model, ctrl)?.eval(0.0);
    Ok(alphas
        .par_iter()
        .map(|&a| {
            let beta_1 = b1.eval(a);
            let beta_2 = b2.eval(a);
            let beta_tilde_2 = beta_2 - (2.0 * ex + 1.0) * beta_1 - beta_1 * beta_1 + parseval;
            VarianceDecomposition {
                alpha: a.rem_euclid(1.0),
                var_x,
                parseval,
                beta_1,
                beta_2,
                beta_tilde_2,
                value: var_x + 1.0 / 12.0 - parseval + beta_tilde_2,
            }
        })
        .collect())
}

pub fn var_rounded_decomposition(model: &dyn CharacteristicModel, alpha: f64, ctrl: &SeriesControl) -> Result<VarianceDecomposition> {
    Ok(variance_profile(model, &[alpha], ctrl)?[0])
}

pub fn var_rounded(model: &dyn CharacteristicModel, alpha: f64, ctrl: &SeriesControl) -> Result<f64> {
    Ok(var_rounded_decomposition(model, alpha, ctrl)?.value)
}

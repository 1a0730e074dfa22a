use num_complex::Complex64;

use crate::model::CharacteristicModel;
use crate::rounding::char_term;
use crate::special_fn::complex_expm1;
use crate::{Error, Result};

/// Mass allowed outside the summation window.
const CLIP_LIMIT: f64 = 1e-9;

/// Lattice sum with the probability mass it left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    pub clipped_mass: f64,
}

/// `[EX − 40σ, EX + 40σ]` from the first two raw moments.
pub fn default_window(model: &dyn CharacteristicModel) -> Option<(f64, f64)> {
    let raw = model.raw_moments();
    if raw.len() < 2 {
        return None;
    }
    let sd = (raw[1] - raw[0] * raw[0]).max(0.0).sqrt();
    Some((raw[0] - 40.0 * sd, raw[0] + 40.0 * sd))
}

/// `Σ_j (j + 1 − α)^m [F(j + 1 − α) − F(j − α)]` over the cells meeting `window`.
pub fn quad_rounded_moment<F: Fn(f64) -> f64>(cdf: F, m: u32, alpha: f64, window: (f64, f64)) -> Result<QuadEstimate> {
    let a = alpha.rem_euclid(1.0);
    let j_lo = (window.0 + a).floor() as i64;
    let j_hi = (window.1 + a).floor() as i64;
    let mut prev = cdf(j_lo as f64 - a);
    let lower = prev;
    let mut value = 0.0;
    for j in j_lo..=j_hi {
        let x = (j + 1) as f64 - a;
        let next = cdf(x);
        value += x.powi(m as i32) * (next - prev);
        prev = next;
    }
    let clipped_mass = lower + (1.0 - prev);
    if clipped_mass > CLIP_LIMIT {
        return Err(Error::WindowTooSmall(clipped_mass));
    }
    Ok(QuadEstimate { value, clipped_mass })
}

/// The N-th Fejér mean of `Σ_n e^{2πinα} w̃(t + 2πn)` with weights `1 − |n|/(N+1)`.
pub fn cesaro_reference(model: &dyn CharacteristicModel, t: f64, alpha: f64, n_fejer: usize) -> Result<Complex64> {
    if n_fejer == 0 {
        return Err(Error::InvalidArgument("Fejér order must be at least 1".into()));
    }
    let alpha = alpha.rem_euclid(1.0);
    let numer = complex_expm1(Complex64::new(0.0, t));
    let n_fejer = n_fejer as i64;
    let w = (n_fejer + 1) as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in -n_fejer..=n_fejer {
        sum += char_term(model, t, alpha, n, numer)? * (1.0 - n.unsigned_abs() as f64 / w);
    }
    Ok(sum)
}

use crate::lattice::LatticeDistribution;
use crate::model::CharacteristicModel;
use crate::{Error, Result};

/// Mass allowed outside the window passed to [`pmf_rounded`].
pub const WINDOW_TAIL: f64 = 1e-9;

fn cdf_of(model: &dyn CharacteristicModel, x: f64) -> Result<f64> {
    model.cdf(x).ok_or_else(|| Error::NoCdf(model.name()))
}

/// `P(X_α ≤ x) = F(⌊x + α⌋ − α)`.
pub fn cdf_rounded(model: &dyn CharacteristicModel, x: f64, alpha: f64) -> Result<f64> {
    let a = alpha.rem_euclid(1.0);
    if x == f64::INFINITY {
        return Ok(1.0);
    }
    if x == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    cdf_of(model, (x + a).floor() - a)
}

/// Law of `X_α` on `{j + 1 − α}`, from `P(X_α = j + 1 − α) = F(j + 1 − α) − F(j − α)`
/// for the cells meeting `window = (lo, hi)` in the scale of X.
pub fn pmf_rounded(model: &dyn CharacteristicModel, alpha: f64, window: (f64, f64)) -> Result<LatticeDistribution> {
    let a = alpha.rem_euclid(1.0);
    let (lo, hi) = window;
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!("empty window ({lo}, {hi})")));
    }
    let j_lo = (lo + a).floor() as i64;
    let j_hi = (hi + a).floor() as i64;
    // (F, 1 − F) at every cell edge; masses above the median come from the
    // survival function so that far upper-tail cells keep relative accuracy
    let mut edges = Vec::with_capacity((j_hi - j_lo + 2) as usize);
    for j in j_lo..=j_hi + 1 {
        let x = j as f64 - a;
        let f = cdf_of(model, x)?;
        let s = model.sf(x).unwrap_or(1.0 - f);
        edges.push((f, s));
    }
    let outside = edges[0].0 + edges[edges.len() - 1].1;
    if outside > WINDOW_TAIL {
        return Err(Error::WindowTooSmall(outside));
    }
    let probs = edges
        .windows(2)
        .map(|w| if w[0].0 < 0.5 { w[1].0 - w[0].0 } else { w[0].1 - w[1].1 })
        .collect();
    LatticeDistribution::with_cutoff(1.0 - a, j_lo, probs, 0.0)
}

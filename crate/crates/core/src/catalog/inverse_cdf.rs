use crate::numeric::Pchip;

/// Tabulated inverse of a continuous distribution function, interpolated by a
/// monotone cubic.
#[derive(Debug, Clone)]
pub struct InverseCdfTable {
    inverse: Pchip,
}

/// Grid size used by the catalog samplers.
pub const TABLE_POINTS: usize = 1 << 14;

impl InverseCdfTable {
    /// Tabulates `cdf` on `points` equally spaced abscissae in `[lo, hi]`; flat
    /// stretches (increments below 1e-15) are dropped so the inverse is a function.
    pub fn build<F: Fn(f64) -> f64>(cdf: F, lo: f64, hi: f64, points: usize) -> Self {
        let mut ps = Vec::with_capacity(points);
        let mut xs = Vec::with_capacity(points);
        for k in 0..points {
            let x = lo + (hi - lo) * k as f64 / (points - 1) as f64;
            let p = cdf(x);
            if ps.last().is_none_or(|&last: &f64| p > last + 1e-15) {
                ps.push(p);
                xs.push(x);
            }
        }
        Self { inverse: Pchip::new(ps, xs) }
    }

    /// Quantile at `u ∈ (0, 1)`, clamped to the tabulated range.
    pub fn quantile(&self, u: f64) -> f64 {
        self.inverse.eval(u)
    }
}

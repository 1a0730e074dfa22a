//! Probability mass on a shifted integer lattice `{j + s : j ∈ ℤ}`.

use crate::{Error, Result};

/// Masses below this value are dropped from both ends of the support.
pub const EDGE_CUTOFF: f64 = 1e-15;

/// Law of a random variable supported on `{j + offset}`; `probs[k]` is the mass
/// at `j_min + k + offset`. The offset is kept in `[0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeDistribution {
    pub offset: f64,
    pub j_min: i64,
    pub probs: Vec<f64>,
}

impl LatticeDistribution {
    /// Normalizes the offset into `[0, 1)`, clamps rounding noise below zero and
    /// trims edge masses under [`EDGE_CUTOFF`].
    pub fn new(offset: f64, j_min: i64, probs: Vec<f64>) -> Result<Self> {
        Self::with_cutoff(offset, j_min, probs, EDGE_CUTOFF)
    }

    /// As [`LatticeDistribution::new`] with a caller-chosen edge cutoff; `0.0`
    /// keeps every positive mass.
    pub fn with_cutoff(offset: f64, j_min: i64, probs: Vec<f64>, cutoff: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidArgument(format!("lattice offset {offset}")));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < -1e-12) {
            return Err(Error::InvalidArgument(format!("negative or non-finite mass {p}")));
        }
        let shift = offset.floor();
        let mut d = Self {
            offset: offset - shift,
            j_min: j_min + shift as i64,
            probs: probs.into_iter().map(|p| p.max(0.0)).collect(),
        };
        if d.offset >= 1.0 {
            d.offset = 0.0;
            d.j_min += 1;
        }
        d.trim(cutoff);
        Ok(d)
    }

    pub fn point_mass(x: f64) -> Self {
        let j = x.floor();
        Self {
            offset: x - j,
            j_min: j as i64,
            probs: vec![1.0],
        }
    }

    fn trim(&mut self, cutoff: f64) {
        let first = self.probs.iter().position(|&p| p > cutoff);
        match first {
            None => {
                self.probs.clear();
            }
            Some(lo) => {
                let hi = self.probs.iter().rposition(|&p| p > cutoff).unwrap_or(lo);
                self.probs.truncate(hi + 1);
                self.probs.drain(..lo);
                self.j_min += lo as i64;
            }
        }
    }

    /// Support points with their masses.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(move |(k, &p)| ((self.j_min + k as i64) as f64 + self.offset, p))
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// `E g(Y)`.
    pub fn expect<F: Fn(f64) -> f64>(&self, g: F) -> f64 {
        self.iter().map(|(x, p)| p * g(x)).sum()
    }

    pub fn mean(&self) -> f64 {
        self.expect(|x| x)
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.expect(|x| (x - m) * (x - m))
    }

    pub fn moment(&self, m: u32) -> f64 {
        self.expect(|x| x.powi(m as i32))
    }

    /// `P(Y ≤ x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        self.iter().take_while(|&(y, _)| y <= x).map(|(_, p)| p).sum()
    }

    /// Mass at the support point closest to `x`, or 0 when `x` is off the lattice.
    pub fn mass_at(&self, x: f64) -> f64 {
        let k = (x - self.offset).round() as i64 - self.j_min;
        if k < 0 || k as usize >= self.probs.len() {
            return 0.0;
        }
        let y = (self.j_min + k) as f64 + self.offset;
        if (y - x).abs() > 1e-9 * (1.0 + x.abs()) {
            return 0.0;
        }
        self.probs[k as usize]
    }

    /// `Y + k` for an integer `k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            offset: self.offset,
            j_min: self.j_min + k,
            probs: self.probs.clone(),
        }
    }
}

/// Offsets closer than this (mod 1) are treated as the same lattice.
const OFFSET_MATCH: f64 = 1e-9;

/// `(1/2) Σ |P(Y₁ = x) − P(Y₂ = x)|`; 1 when the lattices are disjoint.
pub fn tv_distance(d1: &LatticeDistribution, d2: &LatticeDistribution) -> f64 {
    let gap = (d1.offset - d2.offset).rem_euclid(1.0);
    if gap > OFFSET_MATCH && 1.0 - gap > OFFSET_MATCH {
        return 1.0;
    }
    // d2's offset may sit just below 1 while d1's sits at 0, or vice versa
    let j_shift = (d2.offset - d1.offset).round() as i64;
    let lo = d1.j_min.min(d2.j_min + j_shift);
    let hi = (d1.j_min + d1.probs.len() as i64).max(d2.j_min + j_shift + d2.probs.len() as i64);
    let get = |d: &LatticeDistribution, j: i64| -> f64 {
        let k = j - d.j_min;
        if k < 0 || k as usize >= d.probs.len() {
            0.0
        } else {
            d.probs[k as usize]
        }
    };
    let mut s = 0.0;
    for j in lo..hi {
        s += (get(d1, j) - get(d2, j - j_shift)).abs();
    }
    (0.5 * s).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_trim() {
        let d = LatticeDistribution::new(1.5, 0, vec![0.0, 1e-18, 0.5, 0.5, 0.0]).unwrap();
        assert_eq!(d.offset, 0.5);
        assert_eq!(d.j_min, 3);
        assert_eq!(d.probs, vec![0.5, 0.5]);
        assert_eq!(d.mean(), 4.0);
    }

    #[test]
    fn tv_basics() {
        let a = LatticeDistribution::new(0.0, 0, vec![0.5, 0.5]).unwrap();
        let b = LatticeDistribution::new(0.0, 1, vec![0.5, 0.5]).unwrap();
        let c = LatticeDistribution::new(0.5, 0, vec![1.0]).unwrap();
        assert_eq!(tv_distance(&a, &a), 0.0);
        assert_eq!(tv_distance(&a, &b), 0.5);
        assert_eq!(tv_distance(&a, &c), 1.0);
    }

    #[test]
    fn negative_mass_rejected() {
        assert!(LatticeDistribution::new(0.0, 0, vec![1.1, -0.1]).is_err());
    }
}

//! Exact finite-n laws of the integer-valued processes.

use crate::lattice::LatticeDistribution;
use crate::{Error, Result};

/// Masses this close to 0 or 1 in a distribution function end the support.
const CDF_EDGE: f64 = 1e-15;

/// Extra states kept beyond `⌈log₂ n⌉` in the approximate-counting recursion.
pub const COUNTING_HEADROOM: usize = 64;

/// Law of an integer variable from its distribution function on `k ≥ k0`,
/// where `cdf(k0 − 1) = 0`.
fn from_cdf<F: Fn(i64) -> f64>(cdf: F, k0: i64) -> Result<LatticeDistribution> {
    let mut probs = Vec::new();
    let mut prev = 0.0;
    let mut k = k0;
    loop {
        let c = cdf(k);
        probs.push(c - prev);
        prev = c;
        if c >= 1.0 - CDF_EDGE {
            break;
        }
        k += 1;
        if probs.len() > 100_000 {
            return Err(Error::NotConverged {
                terms: probs.len(),
                tail_bound: 1.0 - c,
            });
        }
    }
    LatticeDistribution::new(0.0, k0, probs)
}

/// Maximum of `n` independent `Ge(p)` variables on `{1, 2, …}`:
/// `P(Y ≤ k) = (1 − q^k)^n`.
pub fn max_geometric(n: u64, p: f64) -> Result<LatticeDistribution> {
    if n == 0 {
        return Err(Error::InvalidArgument("max_geometric needs n >= 1".into()));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidArgument(format!("success probability {p} outside (0, 1)")));
    }
    let ln_q = (-p).ln_1p();
    from_cdf(|k| (n as f64 * (-(k as f64 * ln_q).exp()).ln_1p()).exp(), 1)
}

/// Depth of a given key in a trie over `n` random `m`-ary strings:
/// `P(D ≤ k) = (1 − m^{−k})^{n−1}`.
pub fn trie_depth(n: u64, m: u32) -> Result<LatticeDistribution> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidArgument(format!("trie_depth needs n >= 2 and m >= 2, got n={n}, m={m}")));
    }
    max_geometric(n - 1, 1.0 - 1.0 / m as f64)
}

/// Runs the birth chain `P(U_{j+1} = k + 1 | U_j = k) = 2^{−k}` for `n` steps and
/// hands every row `j = 0..=n` to `visit`. Rows have length `⌈log₂ n⌉ + 64`.
pub fn approx_counting_rows<V: FnMut(u64, &[f64])>(n: u64, mut visit: V) {
    let k_max = (n.max(1) as f64).log2().ceil() as usize + COUNTING_HEADROOM;
    let up: Vec<f64> = (0..=k_max).map(|k| 0.5f64.powi(k as i32)).collect();
    let mut row = vec![0.0; k_max + 1];
    row[0] = 1.0;
    // states with mass below 1e-300 on the left are skipped
    let mut lo = 0usize;
    let mut hi = 0usize;
    visit(0, &row);
    for j in 1..=n {
        let top = (hi + 1).min(k_max);
        for k in (lo..=top).rev() {
            let stay = row[k] * (1.0 - up[k]);
            let arrive = if k > 0 { row[k - 1] * up[k - 1] } else { 0.0 };
            row[k] = stay + arrive;
        }
        hi = top;
        while row[lo] < 1e-300 && lo < hi {
            row[lo] = 0.0;
            lo += 1;
        }
        visit(j, &row);
    }
}

/// Exact law of `U_n`.
pub fn approx_counting(n: u64) -> Result<LatticeDistribution> {
    let mut last = Vec::new();
    approx_counting_rows(n, |j, row| {
        if j == n {
            last = row.to_vec();
        }
    });
    // heavy exponential weights 2^{kU} make even tiny upper masses matter
    LatticeDistribution::with_cutoff(0.0, 0, last, 0.0)
}

/// Law of `S_n = 1 + U_I` with `I` uniform on `{0, …, n − 1}`.
pub fn successful_search(n: u64) -> Result<LatticeDistribution> {
    if n == 0 {
        return Err(Error::InvalidArgument("successful_search needs n >= 1".into()));
    }
    let mut acc: Vec<f64> = Vec::new();
    approx_counting_rows(n - 1, |_, row| {
        if acc.is_empty() {
            acc = vec![0.0; row.len()];
        }
        for (a, r) in acc.iter_mut().zip(row) {
            *a += r;
        }
    });
    let inv = 1.0 / n as f64;
    LatticeDistribution::with_cutoff(0.0, 1, acc.into_iter().map(|a| a * inv).collect(), 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: f64, k: u32) -> f64 {
        (0..k).map(|i| (n - i as f64) / (i + 1) as f64).product()
    }

    #[test]
    fn max_geometric_values() {
        let d = max_geometric(1, 0.5).unwrap();
        assert!((d.cdf(1.0) - 0.5).abs() < 1e-15);
        let d = max_geometric(2, 0.5).unwrap();
        assert!((d.cdf(2.0) - 9.0 / 16.0).abs() < 1e-15);
        assert!((d.total_mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trie_depth_values() {
        let d = trie_depth(2, 2).unwrap();
        assert!((d.mass_at(1.0) - 0.5).abs() < 1e-15);
        assert!((d.cdf(2.0) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn counting_small_cases() {
        let d = approx_counting(1).unwrap();
        assert_eq!(d.j_min, 1);
        assert!((d.mass_at(1.0) - 1.0).abs() < 1e-15);
        let s = successful_search(2).unwrap();
        assert!((s.mass_at(1.0) - 0.5).abs() < 1e-15 && (s.mass_at(2.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn counting_exponential_moments() {
        for n in [1u64, 10, 100, 1000] {
            let d = approx_counting(n).unwrap();
            let nf = n as f64;
            let e1 = d.expect(|k| 2f64.powf(k));
            let e2 = d.expect(|k| 4f64.powf(k));
            let e3 = d.expect(|k| 8f64.powf(k));
            assert!((e1 / (nf + 1.0) - 1.0).abs() < 1e-9, "n={n}");
            assert!((e2 / (3.0 * binom(nf + 1.0, 2) + 1.0) - 1.0).abs() < 1e-9, "n={n}");
            assert!((e3 / (21.0 * binom(nf + 1.0, 3) + 7.0 * nf + 1.0) - 1.0).abs() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn rows_conserve_mass() {
        approx_counting_rows(500, |_, row| {
            let s: f64 = row.iter().sum();
            assert!((s - 1.0).abs() < 1e-13);
        });
    }

    #[test]
    fn successful_search_mean_is_mixture() {
        let n = 37;
        let s = successful_search(n).unwrap();
        let mut acc = 0.0;
        for j in 0..n {
            acc += approx_counting(j).unwrap().mean();
        }
        assert!((s.mean() - 1.0 - acc / n as f64).abs() < 1e-12);
    }
}

//! Comparison of finite-n laws with the rounded limit `⌈X + a_n⌉`.

use crate::catalog::{self, CatalogEntry};
use crate::lattice::{tv_distance, LatticeDistribution};
use crate::oracle::DEFAULT_SEED;
use crate::series::SeriesControl;
use crate::{Error, Result};

use super::{approx_counting, max_geometric, patricia_poisson, successful_search, trie_depth, trie_simulate};

/// Limit masses are accumulated only where the limit CDF lies in
/// `[LIMIT_CLIP, 1 − LIMIT_CLIP]`.
pub const LIMIT_CLIP: f64 = 1e-12;

/// Tries simulated per size for `trie-height:m`.
pub const HEIGHT_TRIALS: u64 = 20_000;

type DistFn = dyn Fn(u64) -> Result<LatticeDistribution> + Send + Sync;
type CenterFn = dyn Fn(u64) -> f64 + Send + Sync;

/// An integer-valued process `Y_n` with centering `a_n` and limit `X`, in the
/// sense `Y_n − a_n → X` along integer-valued sequences.
pub struct ProcessSpec {
    pub name: String,
    dist: Box<DistFn>,
    center: Box<CenterFn>,
    pub limit: CatalogEntry,
}

impl std::fmt::Debug for ProcessSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProcessSpec").field("name", &self.name).field("limit", &self.limit.name).finish()
    }
}

impl ProcessSpec {
    pub fn new<D, A>(name: impl Into<String>, dist: D, center: A, limit: CatalogEntry) -> Self
    where
        D: Fn(u64) -> Result<LatticeDistribution> + Send + Sync + 'static,
        A: Fn(u64) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            dist: Box::new(dist),
            center: Box::new(center),
            limit,
        }
    }

    pub fn dist(&self, n: u64) -> Result<LatticeDistribution> {
        (self.dist)(n)
    }

    pub fn a(&self, n: u64) -> f64 {
        (self.center)(n)
    }
}

/// Name patterns understood by [`by_name`].
pub const PROCESS_NAMES: [&str; 6] = [
    "maxgeo:p",
    "trie-depth:m",
    "trie-height:m",
    "approx-counting",
    "successful-search",
    "patricia:s-grid",
];

fn parse<T: std::str::FromStr>(name: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::UnknownName(name.into()))
}

/// Resolves a process name. For `patricia:s-grid` the index passed to
/// [`ProcessSpec::dist`] is the Poisson parameter `s`.
pub fn by_name(name: &str) -> Result<ProcessSpec> {
    by_name_seeded(name, DEFAULT_SEED, HEIGHT_TRIALS)
}

/// As [`by_name`]; simulated processes (`trie-height:m`) use `trials` tries per
/// `n`, seeded with `seed ^ n`.
pub fn by_name_seeded(name: &str, seed: u64, trials: u64) -> Result<ProcessSpec> {
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (name, None),
    };
    let spec = match (head, param) {
        ("maxgeo", Some(p)) => {
            let p: f64 = parse(name, p)?;
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::UnknownName(name.into()));
            }
            let inv_ln = 1.0 / -(-p).ln_1p();
            ProcessSpec::new(
                name,
                move |n| max_geometric(n, p),
                move |n| (n as f64).ln() * inv_ln,
                catalog::scaled_gumbel(inv_ln)?,
            )
        }
        ("trie-depth", Some(m)) | ("trie-height", Some(m)) => {
            let m: u32 = parse(name, m)?;
            if m < 2 {
                return Err(Error::UnknownName(name.into()));
            }
            let ln_m = (m as f64).ln();
            let limit = catalog::scaled_gumbel(1.0 / ln_m)?;
            if head == "trie-depth" {
                ProcessSpec::new(name, move |n| trie_depth(n, m), move |n| (n as f64).ln() / ln_m, limit)
            } else {
                ProcessSpec::new(
                    name,
                    move |n| Ok(trie_simulate(n, m, trials, seed ^ n)?.height),
                    move |n| (2.0 * (n as f64).ln() - 2f64.ln()) / ln_m,
                    limit,
                )
            }
        }
        ("approx-counting", None) => ProcessSpec::new(
            name,
            approx_counting,
            |n| (n as f64).log2(),
            catalog::approx_counting_limit(),
        ),
        ("successful-search", None) => ProcessSpec::new(
            name,
            successful_search,
            |n| (n as f64).log2(),
            catalog::successful_search_limit(),
        ),
        ("patricia", Some("s-grid")) | ("patricia", None) => ProcessSpec::new(
            "patricia:s-grid",
            |s| patricia_poisson(s as f64, &SeriesControl::default()),
            |s| (s as f64).log2(),
            catalog::patricia_limit(),
        ),
        _ => return Err(Error::UnknownName(name.into())),
    };
    Ok(spec)
}

/// Law of `⌈X + a⌉` from the limit CDF, `P = F(k − a) − F(k − 1 − a)`, over the
/// integers where the CDF is not within [`LIMIT_CLIP`] of 0 or 1.
pub fn rounded_limit(entry: &CatalogEntry, a: f64) -> Result<LatticeDistribution> {
    let model = entry.model();
    let cdf = |x: f64| model.cdf(x).ok_or_else(|| Error::NoCdf(model.name()));
    let clip = |f: f64| {
        if f < LIMIT_CLIP {
            0.0
        } else if f > 1.0 - LIMIT_CLIP {
            1.0
        } else {
            f
        }
    };
    let mut k = a.floor() as i64;
    while clip(cdf(k as f64 - 1.0 - a)?) > 0.0 {
        k -= 8;
    }
    let j_min = k;
    let mut prev = 0.0;
    let mut probs = Vec::new();
    loop {
        let f = clip(cdf(k as f64 - a)?);
        probs.push(f - prev);
        prev = f;
        if f >= 1.0 {
            break;
        }
        k += 1;
        if probs.len() > 10_000 {
            return Err(Error::WindowTooSmall(1.0 - f));
        }
    }
    LatticeDistribution::new(0.0, j_min, probs)
}

/// `(n, a_n, d_TV(Y_n, ⌈X + a_n⌉))` for each `n`.
pub fn convergence_check(spec: &ProcessSpec, n_values: &[u64]) -> Result<Vec<(u64, f64, f64)>> {
    n_values
        .iter()
        .map(|&n| {
            let a = spec.a(n);
            let d = spec.dist(n)?;
            let lim = rounded_limit(&spec.limit, a)?;
            Ok((n, a, tv_distance(&d, &lim)))
        })
        .collect()
}

/// Outcome of [`monotone_cdf_check`]; a violation is `(x, F(x), y, F(y))` with
/// `x < y` and `F(x) > F(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneReport {
    pub passed: bool,
    pub violation: Option<(f64, f64, f64, f64)>,
    pub points: usize,
}

/// Checks that `F` is nondecreasing along `grid` and that `F(x) ≤ F(x + 1)`
/// whenever `x + 1` does not exceed the last grid point.
pub fn monotone_cdf_check<F: Fn(f64) -> f64>(f: F, grid: &[f64]) -> Result<MonotoneReport> {
    monotone_cdf_check_with_slack(f, grid, 0.0)
}

/// As [`monotone_cdf_check`], ignoring decreases of at most `slack`, the size
/// of rounding noise in the evaluation of `F`.
pub fn monotone_cdf_check_with_slack<F: Fn(f64) -> f64>(f: F, grid: &[f64], slack: f64) -> Result<MonotoneReport> {
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("grid must be strictly increasing".into()));
    }
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let last = grid.last().copied().unwrap_or(f64::NEG_INFINITY);
    for (i, w) in values.windows(2).enumerate() {
        if w[1] < w[0] - slack {
            return Ok(MonotoneReport {
                passed: false,
                violation: Some((grid[i], w[0], grid[i + 1], w[1])),
                points: grid.len(),
            });
        }
    }
    for (&x, &fx) in grid.iter().zip(&values) {
        if x + 1.0 <= last {
            let g = f(x + 1.0);
            if g < fx - slack {
                return Ok(MonotoneReport {
                    passed: false,
                    violation: Some((x, fx, x + 1.0, g)),
                    points: grid.len(),
                });
            }
        }
    }
    Ok(MonotoneReport {
        passed: true,
        violation: None,
        points: grid.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_fails() {
        let grid: Vec<f64> = (0..=600).map(|k| k as f64 * 0.01).collect();
        let r = monotone_cdf_check(f64::sin, &grid).unwrap();
        assert!(!r.passed);
        let (x, _, _, _) = r.violation.unwrap();
        assert!((x - std::f64::consts::FRAC_PI_2).abs() < 0.02);
    }

    #[test]
    fn names() {
        for n in ["maxgeo:0.5", "trie-depth:2", "trie-height:3", "approx-counting", "successful-search", "patricia:s-grid"] {
            assert!(by_name(n).is_ok(), "{n}");
        }
        for n in ["maxgeo:2", "trie-depth:1", "foo", "patricia:x"] {
            assert!(matches!(by_name(n), Err(Error::UnknownName(_))), "{n}");
        }
    }

    #[test]
    fn rounded_limit_is_a_law() {
        let e = catalog::scaled_gumbel(1.0 / std::f64::consts::LN_2).unwrap();
        let d = rounded_limit(&e, 10.3).unwrap();
        assert!((d.total_mass() - 1.0).abs() < 1e-11);
    }
}

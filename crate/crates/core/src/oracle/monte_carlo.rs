use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Error, Result};

/// Seed used whenever the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_2001;

/// Trials per independent random stream; fixed so that results do not depend
/// on the number of threads.
pub const MC_CHUNK: u64 = 1 << 14;

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|value − x| ≤ k σ`.
    pub fn agrees_with(&self, x: f64, k: f64) -> bool {
        (self.value - x).abs() <= k * self.std_error
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McComplexEstimate {
    pub value: Complex64,
    /// Standard errors of the real and imaginary parts.
    pub std_error: (f64, f64),
    pub trials: u64,
    pub seed: u64,
}

/// Mean and variance of `X_α` from one set of samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McStats {
    pub mean: McEstimate,
    pub variance: McEstimate,
}

fn rounded(x: f64, alpha: f64) -> f64 {
    (x + alpha).floor() - alpha + 1.0
}

/// Runs `f` over `trials` samples split into fixed chunks, each with its own
/// ChaCha stream, and combines the per-chunk accumulators in chunk order.
fn chunked<S, A, F>(sampler: &S, trials: u64, seed: u64, init: A, f: F) -> A
where
    S: Fn(&mut ChaCha8Rng) -> f64 + Sync,
    A: Copy + Send + Sync + std::ops::Add<Output = A>,
    F: Fn(&mut A, f64) + Sync,
{
    let chunks = trials.div_ceil(MC_CHUNK);
    let parts: Vec<A> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let len = MC_CHUNK.min(trials - c * MC_CHUNK);
            let mut acc = init;
            for _ in 0..len {
                f(&mut acc, sampler(&mut rng));
            }
            acc
        })
        .collect();
    parts.into_iter().fold(init, |a, b| a + b)
}

fn check_trials(trials: u64) -> Result<()> {
    if trials < 100 {
        return Err(Error::InvalidArgument(format!("Monte Carlo needs at least 100 trials, got {trials}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
struct Sums([f64; 5]);

impl std::ops::Add for Sums {
    type Output = Sums;
    fn add(self, o: Sums) -> Sums {
        let mut s = self.0;
        for (a, b) in s.iter_mut().zip(o.0) {
            *a += b;
        }
        Sums(s)
    }
}

/// `E X_α^m` by simulating `⌊X + α⌋ − α + 1` directly.
pub fn mc_rounded_moment<S>(sampler: &S, m: u32, alpha: f64, trials: u64, seed: u64) -> Result<McEstimate>
where
    S: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    check_trials(trials)?;
    let s = chunked(sampler, trials, seed, Sums::default(), |acc, x| {
        let y = rounded(x, alpha).powi(m as i32);
        acc.0[0] += y;
        acc.0[1] += y * y;
    });
    let n = trials as f64;
    let mean = s.0[0] / n;
    let var = ((s.0[1] - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate {
        value: mean,
        std_error: (var / n).sqrt(),
        trials,
        seed,
    })
}

/// Mean and variance of `X_α`; samples are centred at a pilot value to keep
/// the power sums well conditioned.
pub fn mc_rounded_stats<S>(sampler: &S, alpha: f64, trials: u64, seed: u64) -> Result<McStats>
where
    S: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    check_trials(trials)?;
    let pilot = {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        (0..64).map(|_| rounded(sampler(&mut rng), alpha)).sum::<f64>() / 64.0
    };
    let s = chunked(sampler, trials, seed, Sums::default(), |acc, x| {
        let d = rounded(x, alpha) - pilot;
        let d2 = d * d;
        acc.0[0] += d;
        acc.0[1] += d2;
        acc.0[2] += d2 * d;
        acc.0[3] += d2 * d2;
    });
    let n = trials as f64;
    let m1 = s.0[0] / n;
    let m2 = s.0[1] / n;
    let m3 = s.0[2] / n;
    let m4 = s.0[3] / n;
    let var = (m2 - m1 * m1) * n / (n - 1.0);
    // fourth central moment about the sample mean
    let mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1.powi(4);
    let var_se = ((mu4 - var * var).max(0.0) / n).sqrt();
    Ok(McStats {
        mean: McEstimate {
            value: pilot + m1,
            std_error: (var.max(0.0) / n).sqrt(),
            trials,
            seed,
        },
        variance: McEstimate {
            value: var,
            std_error: var_se,
            trials,
            seed,
        },
    })
}

/// `E e^{itX_α}`.
pub fn mc_rounded_charfn<S>(sampler: &S, t: f64, alpha: f64, trials: u64, seed: u64) -> Result<McComplexEstimate>
where
    S: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    check_trials(trials)?;
    let s = chunked(sampler, trials, seed, Sums::default(), |acc, x| {
        let (sin, cos) = (t * rounded(x, alpha)).sin_cos();
        acc.0[0] += cos;
        acc.0[1] += cos * cos;
        acc.0[2] += sin;
        acc.0[3] += sin * sin;
    });
    let n = trials as f64;
    let (re, im) = (s.0[0] / n, s.0[2] / n);
    let se = |sum2: f64, mean: f64| (((sum2 - n * mean * mean) / (n - 1.0)).max(0.0) / n).sqrt();
    Ok(McComplexEstimate {
        value: Complex64::new(re, im),
        std_error: (se(s.0[1], re), se(s.0[3], im)),
        trials,
        seed,
    })
}

//! Monte Carlo depth and height of tries over random `m`-ary strings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::lattice::LatticeDistribution;
use crate::{Error, Result};

/// Default cap on `n · trials`.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// Trials per random stream.
const TRIE_CHUNK: u64 = 256;

/// Empirical laws from [`trie_simulate`], with the raw counts kept for
/// confidence intervals.
#[derive(Debug, Clone)]
pub struct TrieSample {
    pub depth: LatticeDistribution,
    pub height: LatticeDistribution,
    pub depth_counts: Vec<u64>,
    pub height_counts: Vec<u64>,
    pub trials: u64,
}

/// Builds one trie and returns `(depth of key 0, height)`.
///
/// Symbols are only drawn while a node still holds two or more keys, so every
/// string is generated up to the position where it separates from the rest.
fn one_trie<R: Rng>(n: usize, m: u32, rng: &mut R) -> (usize, usize) {
    // (keys in node, node holds key 0, level)
    let mut stack = vec![(n, true, 0usize)];
    let mut depth = 0;
    let mut height = 0;
    let mut counts = vec![0usize; m as usize];
    while let Some((size, marked, level)) = stack.pop() {
        if size <= 1 {
            if marked {
                depth = level;
            }
            height = height.max(level);
            continue;
        }
        counts.iter_mut().for_each(|c| *c = 0);
        let mut marked_child = usize::MAX;
        for key in 0..size {
            let sym = rng.random_range(0..m) as usize;
            counts[sym] += 1;
            if marked && key == 0 {
                marked_child = sym;
            }
        }
        for (sym, &c) in counts.iter().enumerate() {
            if c > 0 {
                stack.push((c, sym == marked_child, level + 1));
            }
        }
    }
    (depth, height)
}

fn histogram_to_law(counts: &[u64], trials: u64) -> Result<LatticeDistribution> {
    LatticeDistribution::new(0.0, 0, counts.iter().map(|&c| c as f64 / trials as f64).collect())
}

/// Depth of a marked key and height of a trie over `n` independent uniform
/// `m`-ary strings, estimated from `trials` tries. Each block of trials uses its
/// own ChaCha stream, so the result does not depend on the thread count.
pub fn trie_simulate(n: u64, m: u32, trials: u64, seed: u64) -> Result<TrieSample> {
    trie_simulate_with_budget(n, m, trials, seed, DEFAULT_BUDGET)
}

pub fn trie_simulate_with_budget(n: u64, m: u32, trials: u64, seed: u64, budget: u64) -> Result<TrieSample> {
    if n < 2 || m < 2 || trials == 0 {
        return Err(Error::InvalidArgument(format!(
            "trie simulation needs n >= 2, m >= 2, trials >= 1 (got {n}, {m}, {trials})"
        )));
    }
    let requested = n.saturating_mul(trials);
    if requested > budget {
        return Err(Error::BudgetExceeded { requested, budget });
    }
    let chunks = trials.div_ceil(TRIE_CHUNK);
    let parts: Vec<(Vec<u64>, Vec<u64>)> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let count = TRIE_CHUNK.min(trials - chunk * TRIE_CHUNK);
            let mut depth = Vec::new();
            let mut height = Vec::new();
            for _ in 0..count {
                let (d, h) = one_trie(n as usize, m, &mut rng);
                bump(&mut depth, d);
                bump(&mut height, h);
            }
            (depth, height)
        })
        .collect();
    let mut depth_counts = Vec::new();
    let mut height_counts = Vec::new();
    for (d, h) in parts {
        merge(&mut depth_counts, &d);
        merge(&mut height_counts, &h);
    }
    Ok(TrieSample {
        depth: histogram_to_law(&depth_counts, trials)?,
        height: histogram_to_law(&height_counts, trials)?,
        depth_counts,
        height_counts,
        trials,
    })
}

fn bump(h: &mut Vec<u64>, k: usize) {
    if h.len() <= k {
        h.resize(k + 1, 0);
    }
    h[k] += 1;
}

fn merge(into: &mut Vec<u64>, from: &[u64]) {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a += b;
    }
}

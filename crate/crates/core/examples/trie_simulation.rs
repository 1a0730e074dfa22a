//! Simulated depth and height of binary tries; the depth is compared with its
//! exact law.

use rounding::oracle::DEFAULT_SEED;
use rounding::processes::{trie_depth, trie_simulate};
use rounding::tv_distance;

fn main() -> rounding::Result<()> {
    let n = 1000;
    let sample = trie_simulate(n, 2, 50_000, DEFAULT_SEED)?;
    let exact = trie_depth(n, 2)?;
    println!("depth: simulated mean {:.4}, exact mean {:.4}, d_TV {:.3e}", sample.depth.mean(), exact.mean(), tv_distance(&sample.depth, &exact));
    println!("height: mean {:.4}, variance {:.4}", sample.height.mean(), sample.height.variance());
    for (h, p) in sample.height.iter().filter(|&(_, p)| p > 0.01) {
        println!("  P(H = {h}) = {p:.4}");
    }
    Ok(())
}

//! The Patricia trie depth limit: its variance plus 1/12 misses 1 by about
//! 1.2e-12, yet the variance of every rounded version is exactly 1.

use rounding::catalog::PatriciaLimit;
use rounding::processes::{patricia_poisson, BernoulliProfile};
use rounding::rounding::{midpoint_grid, prodinger_coefficient, variance_profile};
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let limit = PatriciaLimit::new();
    let ctrl = SeriesControl::default();
    println!("EX = {:.12}", PatriciaLimit::mean());
    println!("Var X = {:.15}", PatriciaLimit::variance());
    println!("Var X + 1/12 - 1 = {:.4e}", PatriciaLimit::variance() + 1.0 / 12.0 - 1.0);

    let profile = variance_profile(&limit, &midpoint_grid(8), &ctrl)?;
    for row in &profile {
        println!("alpha {:.4}  Var X_alpha - 1 = {:+.2e}  (parseval {:.3e})", row.alpha, row.value - 1.0, row.parseval);
    }
    for n in [1, 2] {
        println!("cancelling coefficient n={n}: |c| = {:.2e}", prodinger_coefficient(n, &ctrl)?.norm());
    }

    // finite Poisson parameter: Y_s is a sum of independent indicators
    for s in [1.0, 10.0, 1000.0] {
        let y = patricia_poisson(s, &ctrl)?;
        let indicators = BernoulliProfile::patricia(s, 1e-18)?.success_probs.len();
        println!("s = {s:6}: E Y_s = {:.6}, Var Y_s = {:.15} (1 - e^-s = {:.15}), {indicators} indicators", y.mean(), y.variance(), -(-s).exp_m1());
    }
    Ok(())
}

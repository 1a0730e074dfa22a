//! Compares exact E X_α and Var X_α with simulation and with direct lattice
//! quadrature of the distribution function.

use rand::RngCore;
use rounding::catalog;
use rounding::oracle::{default_window, mc_rounded_stats, quad_rounded_moment, DEFAULT_SEED};
use rounding::rounding::{moment_rounded, var_rounded};
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let ctrl = SeriesControl::default();
    for name in ["gumbel:1.4426950408889634", "aldous", "approx-counting"] {
        let entry = catalog::by_name(name)?;
        let model = entry.model();
        let sampler = |r: &mut rand_chacha::ChaCha8Rng| model.sample(r as &mut dyn RngCore).expect("model has a sampler");
        let window = default_window(model).expect("two moments");
        for alpha in [0.0, 0.5] {
            let mean = moment_rounded(model, 1, alpha, &ctrl)?;
            let var = var_rounded(model, alpha, &ctrl)?;
            let mc = mc_rounded_stats(&sampler, alpha, 200_000, DEFAULT_SEED)?;
            let q = quad_rounded_moment(|x| model.cdf(x).unwrap(), 1, alpha, window)?;
            println!(
                "{name} alpha {alpha}: mean {mean:.8} (quadrature {:.8}, simulation {:.5} ± {:.1e}), variance {var:.8} (simulation {:.5} ± {:.1e})",
                q.value, mc.mean.value, mc.mean.std_error, mc.variance.value, mc.variance.std_error
            );
        }
    }
    Ok(())
}

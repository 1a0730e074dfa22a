//! The periodic fluctuation β_1(α) of E X_α for a Gumbel variable scaled by 1/ln 2,
//! the limit of the maximum of geometric(1/2) variables.

use rounding::catalog;
use rounding::rounding::{midpoint_grid, oscillation_profile};
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let entry = catalog::scaled_gumbel(1.0 / std::f64::consts::LN_2)?;
    let profile = oscillation_profile(entry.model(), 1, &midpoint_grid(16), &SeriesControl::default())?;
    for (a, b) in profile.alphas.iter().zip(&profile.values) {
        println!("alpha {a:.5}  beta_1 {b:+.6e}");
    }
    println!("max |beta_1| = {:.4e} using {} lattice terms", profile.max_abs(), profile.truncation_n);
    Ok(())
}

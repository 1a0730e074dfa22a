//! The mean of the fractional part of the random assignment limit law is 11/24
//! up to a correction far below double precision.

use rounding::catalog;
use rounding::rounding::moment_rounded;
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let entry = catalog::aldous_assignment();
    let model = entry.model();
    let ex = model.raw_moments()[0];
    let ex0 = moment_rounded(model, 1, 0.0, &SeriesControl::default())?;
    let frac = ex + 1.0 - ex0;
    println!("EX = zeta(2) = {ex:.15}");
    println!("E floor(X) + 1 = {ex0:.15}");
    println!("E{{X}} = {frac:.15}, 11/24 = {:.15}, difference {:.1e}", 11.0 / 24.0, frac - 11.0 / 24.0);
    Ok(())
}

//! For X uniform on (0, N) the rounding is exact: β_1 vanishes and Var X_α is an
//! explicit quadratic in α. Adding two uniforms keeps β_1 and β_2 at zero but not β_3.

use rounding::catalog;
use rounding::rounding::{beta_m, var_rounded};
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let ctrl = SeriesControl::default();
    let u = catalog::uniform_n(3)?;
    let var_x = 9.0 / 12.0;
    for alpha in [0.1, 0.5, 0.9] {
        println!(
            "uniform:3 alpha {alpha}: beta_1 = {:+.1e}, Var X_alpha = {:.12} (expected {:.12})",
            beta_m(u.model(), 1, alpha, &ctrl)?,
            var_rounded(u.model(), alpha, &ctrl)?,
            var_x - 1.0 / 12.0 + alpha * (1.0 - alpha)
        );
    }
    let w = catalog::uniform_n_plus_2u(2)?;
    for alpha in [0.1, 0.3] {
        let b: Vec<String> = (1..=3)
            .map(|m| beta_m(w.model(), m, alpha, &ctrl).map(|v| format!("{v:+.3e}")))
            .collect::<rounding::Result<_>>()?;
        println!("uniform2u:2 alpha {alpha}: beta_1..3 = {}", b.join(", "));
    }
    Ok(())
}

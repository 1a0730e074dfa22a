//! The lattice series for E e^{itX_α} converges only conditionally for laws
//! with a jump in the density; Fejér means recover it.

use rounding::catalog;
use rounding::rounding::char_rounded;
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    let u = catalog::uniform_n(1)?;
    let (t, alpha) = (1.3, 0.25);
    // X uniform on (0, 1): X_α takes 1 − α and 2 − α with masses 1 − α and α
    let exact = num_complex::Complex64::from_polar(1.0 - alpha, t * (1.0 - alpha)) + num_complex::Complex64::from_polar(alpha, t * (2.0 - alpha));
    println!("exact {exact:.10}");
    for n in [16, 256, 4096, 65536] {
        let z = char_rounded(u.model(), t, alpha, &SeriesControl::cesaro(n))?;
        println!("Fejér order {n:6}: {z:.10}  error {:.2e}", (z - exact).norm());
    }
    Ok(())
}

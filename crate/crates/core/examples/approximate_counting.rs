//! Morris's approximate counter: exact law of U_n, the identity E 2^{U_n} = n + 1,
//! and the rounded-limit exponential moments 1, 3/2, 7/2.

use num_complex::Complex64;
use rounding::catalog;
use rounding::processes::approx_counting;
use rounding::rounding::mgf_rounded;
use rounding::SeriesControl;

fn main() -> rounding::Result<()> {
    for n in [10u64, 100, 1000] {
        let u = approx_counting(n)?;
        let e1 = u.expect(|x| x.exp2());
        let e2 = u.expect(|x| (2.0 * x).exp2());
        let nf = n as f64;
        println!(
            "n = {n:4}: E U_n = {:.6}, E 2^U = {e1:.9} (n+1 = {}), E 4^U = {e2:.6} (3 C(n+1,2) + 1 = {})",
            u.mean(),
            n + 1,
            1.5 * (nf + 1.0) * nf + 1.0
        );
    }

    let entry = catalog::approx_counting_limit();
    let ctrl = SeriesControl::default();
    for alpha in [0.0, 0.3, 0.7] {
        let vals: Vec<String> = (1..=3)
            .map(|k| {
                let t = Complex64::new(k as f64 * std::f64::consts::LN_2, 0.0);
                mgf_rounded(entry.model(), t, alpha, &ctrl).map(|z| format!("{:.12}", z.re))
            })
            .collect::<rounding::Result<_>>()?;
        println!("alpha {alpha}: E 2^(k X_alpha), k = 1..3: {}", vals.join(", "));
    }
    Ok(())
}

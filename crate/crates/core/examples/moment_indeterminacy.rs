//! 2^{X_0} and 2^{X_{1/2}} for the approximate-counting limit share their
//! first integer moments but live on disjoint lattices.

use rounding::catalog;
use rounding::rounding::pmf_rounded;
use rounding::tv_distance;

fn main() -> rounding::Result<()> {
    let entry = catalog::approx_counting_limit();
    let window = (-12.0, 7.5);
    let d0 = pmf_rounded(entry.model(), 0.0, window)?;
    let d1 = pmf_rounded(entry.model(), 0.5, window)?;
    for k in 1..=3 {
        let kf = k as f64;
        println!("k = {k}: E 2^(k X_0) = {:.12}, E 2^(k X_1/2) = {:.12}", d0.expect(|x| (kf * x).exp2()), d1.expect(|x| (kf * x).exp2()));
    }
    println!("total variation distance {}", tv_distance(&d0, &d1));
    Ok(())
}

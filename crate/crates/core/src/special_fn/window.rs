//! The entire function f(u) = (e^u − 1)/u = ∫₀¹ e^{us} ds and its derivatives.

use num_complex::Complex64;

use super::eta::complex_expm1;

/// Below this modulus (or below `k_max`, whichever is larger) the power series
/// is used; above it the upward recurrence is stable because each step
/// multiplies the inherited error by `k/|u| ≤ 1`.
pub const SERIES_SWITCH: f64 = 2.0;

/// f(u), f′(u), …, f^{(k_max)}(u).
pub fn f_derivatives(u: Complex64, k_max: usize) -> Vec<Complex64> {
    let r = u.norm();
    if r < SERIES_SWITCH.max(k_max as f64) {
        (0..=k_max).map(|k| f_series(u, k)).collect()
    } else {
        let eu = u.exp();
        let mut out = Vec::with_capacity(k_max + 1);
        out.push(complex_expm1(u) / u);
        for k in 1..=k_max {
            let prev = out[k - 1];
            out.push((eu - prev * k as f64) / u);
        }
        out
    }
}

/// f^{(k)}(u) = Σ_j u^j / (j! (j + k + 1)).
fn f_series(u: Complex64, k: usize) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0); // u^j / j!
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..400 {
        let add = term / (j + k + 1) as f64;
        sum += add;
        if add.norm() <= 1e-17 * sum.norm() && j as f64 > u.norm() {
            break;
        }
        term *= u / (j + 1) as f64;
    }
    sum
}

/// f^{(k)}(2πin) for n ≠ 0, k = 0..=k_max, using e^u = 1 exactly.
pub fn f_derivatives_lattice(n: i64, k_max: usize) -> Vec<Complex64> {
    assert!(n != 0, "lattice index must be nonzero");
    let u = Complex64::new(0.0, std::f64::consts::TAU * n as f64);
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(Complex64::new(0.0, 0.0));
    for k in 1..=k_max {
        let prev = out[k - 1];
        out.push((1.0 - prev * k as f64) / u);
    }
    out
}

/// Coefficients `p[k][j]` with f^{(k)}(u) = Σ_j p[k][j] u^{−j} whenever e^u = 1.
pub fn lattice_laurent(k_max: usize) -> Vec<Vec<f64>> {
    let mut p = vec![vec![0.0; k_max + 2]; k_max + 1];
    for k in 1..=k_max {
        p[k][1] += 1.0;
        for j in 1..=k {
            let v = -(k as f64) * p[k - 1][j];
            p[k][j + 1] += v;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn values_at_zero() {
        let d = f_derivatives(Complex64::new(0.0, 0.0), 3);
        assert_eq!(d[0].re, 1.0);
        assert_eq!(d[1].re, 0.5);
        assert!((d[2].re - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn lattice_values() {
        for n in [1i64, -2, 5] {
            let u = Complex64::new(0.0, TAU * n as f64);
            let d = f_derivatives(u, 4);
            assert!(d[0].norm() < 1e-15);
            assert!(close(d[1], 1.0 / u, 1e-13));
            let l = f_derivatives_lattice(n, 4);
            for k in 0..=4 {
                assert!((d[k] - l[k]).norm() < 1e-14, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn branches_agree_near_switch() {
        for &(re, im) in &[(1.9, 0.3), (-0.5, 2.5), (0.0, 6.0), (3.0, -4.0)] {
            let u = Complex64::new(re, im);
            for k in 0..=4 {
                let s = f_series(u, k);
                let mut r = vec![complex_expm1(u) / u];
                for j in 1..=k {
                    let prev = r[j - 1];
                    r.push((u.exp() - prev * j as f64) / u);
                }
                assert!(close(r[k], s, 1e-12), "u={u} k={k}");
            }
        }
    }

    #[test]
    fn laurent_matches_recurrence() {
        let p = lattice_laurent(4);
        let n = 3i64;
        let u = Complex64::new(0.0, TAU * n as f64);
        let l = f_derivatives_lattice(n, 4);
        for k in 0..=4 {
            let mut v = Complex64::new(0.0, 0.0);
            for (j, c) in p[k].iter().enumerate() {
                if j > 0 {
                    v += *c * u.powi(-(j as i32));
                }
            }
            assert!((v - l[k]).norm() < 1e-15);
        }
    }
}

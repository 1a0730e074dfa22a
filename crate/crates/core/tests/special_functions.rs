#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use proptest::prelude::*;
use rounding::special_fn::*;
use rounding::SeriesControl;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

// reference values from a 30-digit evaluation
#[test]
fn gamma_reference_values() {
    let l2 = std::f64::consts::LN_2;
    let tau = std::f64::consts::TAU;
    let cases = [
        (c(1.0, -tau / l2), c(3.176622645215371521e-6, 3.7861079985648222373e-6)),
        (c(1.0, -2.0 * tau / l2), c(-3.7130273099474193897e-12, 2.6764601770054968314e-12)),
        (c(1.0, -5.0 * tau / l2), c(-1.7943544701395085968e-30, -9.5461138395270624376e-31)),
        (c(0.3, 55.0), c(-5.270841653234329992e-39, 3.3524809572173360259e-38)),
        (c(-7.5, 40.0), c(1.8692892247605774125e-40, -9.8641533252546591537e-42)),
        (c(3.2, -17.0), c(-1.0813904726197583976e-8, 8.0032801839199616975e-9)),
    ];
    for (z, want) in cases {
        let got = gamma_complex(z).unwrap();
        assert!(rel(got, want) < 1e-13, "Γ({z}) = {got}, want {want}");
    }
}

#[test]
fn polygamma_reference_values() {
    let z = c(1.0, -std::f64::consts::TAU / std::f64::consts::LN_2);
    assert!(rel(digamma(z).unwrap(), c(2.2054053965660129966, -1.5156374267567337209)) < 1e-13);
    assert!(rel(trigamma(z).unwrap(), c(0.0060850085068400939779, 0.11009348903844892595)) < 1e-12);
    let z = c(0.5, 30.0);
    assert!(rel(digamma(z).unwrap(), c(3.4011510763585218379, std::f64::consts::FRAC_PI_2)) < 1e-13);
    assert!(rel(trigamma(z).unwrap(), c(5.0948688601201196846e-38, -0.033336420954417115572)) < 1e-12);
}

#[test]
fn trigamma_small_integers() {
    let z2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((trigamma(c(1.0, 0.0)).unwrap().re - z2).abs() < 1e-14);
    assert!((trigamma(c(2.0, 0.0)).unwrap().re - (z2 - 1.0)).abs() < 1e-14);
}

#[test]
fn gamma_modulus_identity() {
    for t in [0.5, 1.0, 2.0, 5.0, 20.0] {
        let g = gamma_complex(c(0.0, t)).unwrap();
        let v = g.norm_sqr() * t * (std::f64::consts::PI * t).sinh();
        assert!((v / std::f64::consts::PI - 1.0).abs() < 1e-11, "t={t}");
    }
}

#[test]
fn eta_zeros_and_q() {
    let ctrl = SeriesControl::with_tol(1e-14);
    for k in 1..=3 {
        let e = eta_product(c(2f64.powi(k), 0.0), &ctrl).unwrap();
        assert!(e.value.norm() <= 1e-14);
    }
    let rq = rq_coefficients(40);
    let e1 = eta_product(c(1.0, 0.0), &ctrl).unwrap().value.re;
    assert!((rq.q - e1).abs() < 1e-12);
}

#[test]
fn eta_power_series() {
    let ctrl = SeriesControl::with_tol(1e-15);
    let rq = rq_coefficients(60);
    for z in [c(-1.0, 0.0), c(0.5, 0.0), c(1.0, 1.0)] {
        let want = eta_product(z, &ctrl).unwrap().value;
        let mut prev = f64::INFINITY;
        for jmax in [2usize, 5, 10, 20] {
            let s: Complex64 = (0..=jmax).map(|j| rq.r[j] * z.powi(j as i32)).sum();
            let err = (s - want).norm();
            assert!(err <= prev);
            prev = err;
        }
        assert!(prev < 1e-14);
    }
}

#[test]
fn g_zero_value() {
    let ctrl = SeriesControl::with_tol(1e-15);
    let a = g_series(c(0.0, 0.0), &ctrl).unwrap();
    let b = g_log_series(c(0.0, 0.0)).unwrap();
    assert!((a.value - b).norm() < 1e-12);
    assert!((a.value.re - 0.86887665).abs() < 5e-9);
    assert!(a.tail_bound <= 1e-15);
}

#[test]
fn g_routes_agree_off_axis() {
    let ctrl = SeriesControl::with_tol(1e-15);
    for z in [c(0.5, 0.0), c(-0.5, 2.0), c(1.0, -9.064720283654388)] {
        let a = g_series(z, &ctrl).unwrap().value;
        let b = g_log_series(z).unwrap();
        assert!(rel(a, b) < 1e-11, "z={z}: {a} vs {b}");
    }
}

#[test]
fn window_lattice_facts() {
    for n in [1i64, 2, -3, 10] {
        let u = c(0.0, std::f64::consts::TAU * n as f64);
        let d = f_derivatives(u, 2);
        assert!(d[0].norm() < 1e-15);
        assert!(rel(d[1], 1.0 / u) < 1e-13);
    }
}

proptest! {
    #[test]
    fn gamma_recurrence(re in -10.0f64..10.0, im in -40.0f64..40.0) {
        let z = c(re, im);
        prop_assume!(z.norm() > 1e-3);
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-11, "z={}", z);
    }

    #[test]
    fn trigamma_recurrence(re in -10.0f64..10.0, im in 0.1f64..40.0) {
        let z = c(re, im);
        let lhs = trigamma(z).unwrap();
        let rhs = trigamma(z + 1.0).unwrap() + 1.0 / (z * z);
        prop_assert!(rel(lhs, rhs) < 1e-11);
    }

    #[test]
    fn window_recurrence(re in -5.0f64..5.0, im in -30.0f64..30.0) {
        // u f^{(k)} + k f^{(k−1)} = e^u
        let u = c(re, im);
        prop_assume!(u.norm() > 1e-6);
        let d = f_derivatives(u, 4);
        for k in 1..=4 {
            let lhs = u * d[k] + d[k - 1] * k as f64;
            prop_assert!(rel(lhs, u.exp()) < 1e-11, "u={} k={}", u, k);
        }
    }
}

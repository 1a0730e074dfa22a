use num_complex::Complex64;
use rounding::catalog::{self, g_zero, CatalogEntry};
use rounding::numeric::integrate;
use rounding::special_fn::{eta_product, g_log_series, g_series, gamma_complex, rq_coefficients, EULER_GAMMA};
use rounding::SeriesControl;

const LN2: f64 = std::f64::consts::LN_2;

fn extra(e: &CatalogEntry, name: &str) -> f64 {
    e.extra(name).unwrap_or_else(|| panic!("{} has no `{name}`", e.name))
}

#[test]
fn named_constants_reproduce_independently() {
    let ac = catalog::approx_counting_limit();
    let ctrl = SeriesControl::with_tol(1e-16);
    let eta1 = eta_product(Complex64::new(1.0, 0.0), &ctrl).unwrap().value.re;
    let q_sum: f64 = rq_coefficients(60).r.iter().sum();
    assert!((extra(&ac, "Q") - eta1).abs() < 1e-12);
    assert!((extra(&ac, "eta1") - q_sum).abs() < 1e-10);
    // α = Σ_{k≥1} d(k) 2^{−k}, d = number of divisors
    let alpha_divisors: f64 = (1..=60u32).map(|k| (1..=k).filter(|d| k % d == 0).count() as f64 * 0.5f64.powi(k as i32)).sum();
    assert!((extra(&ac, "alpha_const") - alpha_divisors).abs() < 1e-12);
    assert!((extra(&ac, "alpha_const") - 1.606695152415291).abs() < 1e-12);
    let g_gamma = g_series(Complex64::new(0.0, 0.0), &ctrl).unwrap().value.re;
    let g_log = g_log_series(Complex64::new(0.0, 0.0)).unwrap().re;
    let pat = catalog::patricia_limit();
    assert!((extra(&pat, "g0") - g_gamma).abs() < 1e-10);
    assert!((g_zero() - g_log).abs() < 1e-12);
    assert!((extra(&pat, "euler_gamma") - EULER_GAMMA).abs() < 1e-16);
}

#[test]
fn gumbel_examples() {
    let g = catalog::scaled_gumbel(1.0 / LN2).unwrap();
    let want = gamma_complex(Complex64::new(1.0, -std::f64::consts::TAU / LN2)).unwrap();
    assert!((g.model().phi(std::f64::consts::TAU).unwrap() - want).norm() < 1e-18);
    let g1 = catalog::scaled_gumbel(1.0).unwrap();
    assert!((g1.model().raw_moments()[0] - 0.5772156649).abs() < 1e-10);
    assert!(catalog::scaled_gumbel(0.0).is_err());
}

#[test]
fn uniform_lattice_facts() {
    let u = catalog::uniform_n(3).unwrap();
    let w = catalog::uniform_n_plus_2u(2).unwrap();
    for n in [1i64, 2, -3] {
        let d = u.model().phi_lattice(n, 0).unwrap();
        assert!(d[0].norm() < 1e-15);
        let d = w.model().phi_lattice(n, 2).unwrap();
        let tn = std::f64::consts::TAU * n as f64;
        assert!(d[0].norm() < 1e-15 && d[1].norm() < 1e-15);
        // second derivative, twice the Taylor coefficient 1/(2πn)²
        assert!((d[2] - 2.0 / (tn * tn)).norm() < 1e-15, "{}", d[2]);
    }
    let u1 = catalog::uniform_n(1).unwrap();
    let m = u1.model().raw_moments();
    assert!((m[0] - 0.5).abs() < 1e-15 && (m[1] - m[0] * m[0] - 1.0 / 12.0).abs() < 1e-15);
}

#[test]
fn approx_counting_psi_at_log_lattice() {
    let e = catalog::approx_counting_limit();
    let m = e.model();
    let psi = |t: Complex64| m.psi(t).unwrap();
    assert!((psi(Complex64::new(LN2, 0.0)) - LN2).norm() < 1e-12);
    assert!((psi(Complex64::new(2.0 * LN2, 0.0)) - LN2).norm() < 1e-12);
    // ln 2 · 1 · 3 · 7 / 3!
    assert!((psi(Complex64::new(4.0 * LN2, 0.0)).re - LN2 * 21.0 / 6.0).abs() < 1e-12);
    for k in 1..=3 {
        for n in [1, 2] {
            let t = Complex64::new(k as f64 * LN2, std::f64::consts::TAU * n as f64);
            assert!(psi(t).norm() < 1e-12, "k={k} n={n}: {}", psi(t));
        }
    }
    let mean = m.raw_moments()[0];
    assert!((mean - (EULER_GAMMA / LN2 - extra(&e, "alpha_const"))).abs() < 1e-12);
}

#[test]
fn approx_counting_tail_is_super_exponential() {
    let e = catalog::approx_counting_limit();
    for x in [10.0, 15.0, 20.0] {
        let s = e.model().sf(x).unwrap();
        assert!(s < (-x).exp2(), "1 - F({x}) = {s}");
    }
}

#[test]
fn successful_search_is_a_convolution() {
    // X = X_u − Z/ln 2 + 1 with Z standard exponential
    let s = catalog::successful_search_limit();
    let u = catalog::approx_counting_limit();
    let mut worst: f64 = 0.0;
    for i in 0..=40 {
        let x = -4.0 + 0.25 * i as f64;
        let (conv, _) = integrate(|z| u.model().cdf(x - 1.0 + z / LN2).unwrap() * (-z).exp(), 0.0, 45.0, 1e-11).unwrap();
        worst = worst.max((conv - s.model().cdf(x).unwrap()).abs());
    }
    assert!(worst < 1e-6, "sup-norm {worst}");
}

#[test]
fn successful_search_strip_and_values() {
    let s = catalog::successful_search_limit();
    let m = s.model();
    assert!((m.psi(Complex64::new(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-14);
    assert!(m.psi(Complex64::new(-LN2, 0.0)).is_err());
    assert!(m.psi(Complex64::new(-1.0, 3.0)).is_err());
    for n in [1i64, 2] {
        let w = Complex64::new(0.0, std::f64::consts::TAU * n as f64 / LN2);
        let want = gamma_complex(1.0 - w).unwrap() / (1.0 + w);
        let got = m.phi_lattice(n, 0).unwrap()[0];
        assert!((got - want).norm() < 1e-12 * want.norm(), "n={n}: {got} vs {want}");
    }
}

#[test]
fn patricia_lower_bound_and_moments() {
    let p = catalog::patricia_limit();
    let m = p.model();
    for i in 0..=60 {
        let x = -3.0 + 0.25 * i as f64;
        let f = m.cdf(x).unwrap();
        assert!(f >= (-(-x).exp2()).exp() - 1e-15, "F({x}) = {f}");
    }
    let raw = m.raw_moments();
    assert!((raw[0] + 0.16725382272).abs() < 1e-10);
    assert!((raw[1] - raw[0] * raw[0] - 0.916666666667904).abs() < 1e-12);
}

#[test]
fn aldous_examples() {
    let a = catalog::aldous_assignment();
    let m = a.model();
    assert!((m.psi(Complex64::new(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
    assert!((m.raw_moments()[0] - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
    assert!(m.psi(Complex64::new(1.0, 0.0)).is_err());
}

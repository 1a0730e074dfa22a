use num_complex::Complex64;
use proptest::prelude::*;
use rounding::catalog::{self, CatalogEntry};

fn entries() -> Vec<CatalogEntry> {
    vec![
        catalog::scaled_gumbel(1.0).unwrap(),
        catalog::scaled_gumbel(1.0 / std::f64::consts::LN_2).unwrap(),
        catalog::aldous_assignment(),
        catalog::uniform_n(1).unwrap(),
        catalog::uniform_n(4).unwrap(),
        catalog::uniform_n_plus_2u(2).unwrap(),
        catalog::approx_counting_limit(),
        catalog::successful_search_limit(),
        catalog::patricia_limit(),
    ]
}

#[test]
fn phi_at_zero_is_one() {
    for e in entries() {
        let v = e.model().phi(0.0).unwrap();
        assert!((v - 1.0).norm() < 1e-12, "{}: {v}", e.name);
    }
}

#[test]
fn lattice_derivatives_at_origin_are_moments() {
    // φ^{(k)}(0) = i^k EX^k
    for e in entries() {
        let m = e.model();
        // some models only supply first lattice derivatives
        let order = if m.phi_lattice(0, 2).is_ok() { 2 } else { 1 };
        let d = m.phi_lattice(0, order).unwrap();
        let raw = m.raw_moments();
        let mut ik = Complex64::new(1.0, 0.0);
        for k in 1..=order {
            ik *= Complex64::i();
            let want = ik * raw[k - 1];
            assert!((d[k] - want).norm() < 1e-8 * (1.0 + want.norm()), "{} k={k}: {} vs {want}", e.name, d[k]);
        }
    }
}

#[test]
fn lattice_values_match_phi() {
    for e in entries() {
        let m = e.model();
        for n in [-2i64, -1, 1, 3] {
            let t = std::f64::consts::TAU * n as f64;
            let a = m.phi_lattice(n, 0).unwrap()[0];
            let b = m.phi(t).unwrap();
            assert!((a - b).norm() < 1e-10 * (1.0 + b.norm()), "{} n={n}: {a} vs {b}", e.name);
        }
    }
}

#[test]
fn names_resolve_to_themselves() {
    for e in entries() {
        let again = catalog::by_name(&e.name).unwrap();
        assert_eq!(again.name, e.name);
    }
    for bad in ["gumbel", "gumbel:-1", "uniform:0", "uniform:x", "cauchy", "patricia:3"] {
        assert!(matches!(catalog::by_name(bad), Err(rounding::Error::UnknownName(_))), "{bad}");
    }
}

#[test]
fn distribution_functions_agree_with_densities() {
    for e in entries() {
        let m = e.model();
        let Some(_) = m.density(0.5) else { continue };
        for (a, b) in [(-0.5, 0.7), (0.2, 1.9), (1.0, 3.0)] {
            let (mass, _) = rounding::numeric::integrate(|x| m.density(x).unwrap(), a, b, 1e-12).unwrap();
            let diff = m.cdf(b).unwrap() - m.cdf(a).unwrap();
            assert!((mass - diff).abs() < 1e-8, "{} on ({a}, {b}): {mass} vs {diff}", e.name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_symmetry(idx in 0usize..9, t in -40.0f64..40.0) {
        let e = &entries()[idx];
        let a = e.model().phi(t).unwrap();
        let b = e.model().phi(-t).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-12 * (1.0 + a.norm()), "{}: {} vs {}", e.name, a, b);
    }

    #[test]
    fn phi_bounded_by_one(idx in 0usize..9, t in -60.0f64..60.0) {
        let e = &entries()[idx];
        prop_assert!(e.model().phi(t).unwrap().norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn psi_on_imaginary_axis_is_phi(idx in 0usize..9, t in -30.0f64..30.0) {
        let e = &entries()[idx];
        let m = e.model();
        prop_assume!(m.has_psi());
        let a = m.psi(Complex64::new(0.0, t)).unwrap();
        let b = m.phi(t).unwrap();
        prop_assert!((a - b).norm() < 1e-10 * (1.0 + b.norm()), "{}: {} vs {}", e.name, a, b);
    }

    #[test]
    fn cdf_in_unit_interval_and_nondecreasing(idx in 0usize..9, x in -8.0f64..12.0, h in 0.0f64..2.0) {
        let e = &entries()[idx];
        let m = e.model();
        let (f0, f1) = (m.cdf(x).unwrap(), m.cdf(x + h).unwrap());
        prop_assert!((0.0..=1.0).contains(&f0));
        prop_assert!(f1 >= f0 - 1e-14, "{}: F({x}) = {f0} > F({}) = {f1}", e.name, x + h);
        let s = m.sf(x).unwrap();
        prop_assert!((f0 + s - 1.0).abs() < 1e-12);
    }
}

//! Limits arising from approximate counting and digital search trees.

use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use rand::{Rng, RngCore};
use rand_distr::{Distribution, Exp1};

use super::inverse_cdf::{InverseCdfTable, TABLE_POINTS};
use super::EXPONENTIAL_DECAY;
use crate::model::{cauchy_phi_lattice, CharacteristicModel};
use crate::oracle::cumulants_to_moments;
use crate::series::SeriesControl;
use crate::special_fn::{digamma, eta_product, gamma_complex, rq_coefficients, zeta_int, EULER_GAMMA};
use crate::{Error, Result};

const LN2: f64 = std::f64::consts::LN_2;

/// Number of `R_j` terms used in the distribution functions.
const R_TERMS: usize = 40;

/// Around `t = k ln 2` the product `η(e^t) Γ(1 − t/ln 2)` is replaced by its
/// first-order expansion inside this radius.
pub const POLE_GUARD: f64 = 1e-6;

/// Shared constants: `R_j`, `Q = η(1)`, `α = Σ_{n≥1} 1/(2^n − 1)`.
#[derive(Debug, Clone)]
pub struct DigitalConstants {
    pub r: Vec<f64>,
    pub q: f64,
    pub alpha: f64,
}

pub fn constants() -> &'static DigitalConstants {
    static C: OnceLock<DigitalConstants> = OnceLock::new();
    C.get_or_init(|| {
        let rq = rq_coefficients(R_TERMS);
        let mut alpha = 0.0;
        for n in (1..=60).rev() {
            alpha += 1.0 / (2f64.powi(n) - 1.0);
        }
        DigitalConstants {
            r: rq.r,
            q: rq.q,
            alpha,
        }
    })
}

fn ctrl() -> SeriesControl {
    SeriesControl::with_tol(1e-16)
}

/// `ψ(t) = η(e^t) Γ(1 − t/ln 2)/η(1)` without the pole guard.
fn psi_u_raw(t: Complex64) -> Result<Complex64> {
    let c = constants();
    let et = Complex64::from_polar(t.re.exp(), t.im);
    let eta = eta_product(et, &ctrl())?.value;
    if eta == Complex64::new(0.0, 0.0) {
        return Ok(eta);
    }
    Ok(eta / c.q * gamma_complex(1.0 - t / LN2)?)
}

/// `ψ(k ln 2) = ln 2/(k − 1)! ∏_{j<k} (2^j − 1)`.
pub fn psi_u_at_pole(k: u32) -> f64 {
    let mut v = LN2;
    for j in 1..k {
        v *= (2f64.powi(j as i32) - 1.0) / j as f64;
    }
    v
}

fn psi_u(t: Complex64) -> Result<Complex64> {
    let k = (t.re / LN2).round();
    if k >= 1.0 {
        let center = Complex64::new(k * LN2, 0.0);
        let d = t - center;
        if d.norm() < POLE_GUARD {
            // ψ′ at the removable point from a circle of radius 0.1
            let radius = 0.1;
            let nodes = 64;
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..nodes {
                let e = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / nodes as f64);
                acc += psi_u_raw(center + radius * e)? / e;
            }
            let slope = acc / (nodes as f64 * radius);
            return Ok(psi_u_at_pole(k as u32) + slope * d);
        }
    }
    psi_u_raw(t)
}

fn cumulants_u(order: usize) -> Vec<f64> {
    let c = constants();
    (1..=order)
        .map(|r| {
            let series: f64 = (1..=80).rev().map(|p| (p as f64).powi(r as i32 - 1) / (2f64.powi(p) - 1.0)).sum();
            let gamma_part = if r == 1 {
                EULER_GAMMA / LN2
            } else {
                let fact: f64 = (1..r).map(|j| j as f64).product();
                fact * zeta_int(r as u32) / LN2.powi(r as i32)
            };
            let _ = c;
            gamma_part - series
        })
        .collect()
}

/// `1 − F(x) = Σ_j (R_j/Q) (1 − exp(−2^{j−x}))`, using `Σ_j R_j = Q`.
fn sf_u(x: f64) -> f64 {
    let c = constants();
    let mut s = 0.0;
    for (j, rj) in c.r.iter().enumerate().rev() {
        s += rj / c.q * (-(-(2f64.powf(j as f64 - x))).exp_m1());
    }
    s.clamp(0.0, 1.0)
}

/// `F(x) = Σ_j (R_j/Q) exp(−2^{j−x})`, evaluated through `1 − F` for `x > 0`.
fn cdf_u(x: f64) -> f64 {
    let c = constants();
    if x <= 0.0 {
        let mut s = 0.0;
        for (j, rj) in c.r.iter().enumerate().rev() {
            s += rj / c.q * (-(2f64.powf(j as f64 - x))).exp();
        }
        s.clamp(0.0, 1.0)
    } else {
        1.0 - sf_u(x)
    }
}

fn lattice_z(n: i64) -> Complex64 {
    Complex64::new(1.0, -std::f64::consts::TAU * n as f64 / LN2)
}

/// Limit law of `U_n − log₂ n` for approximate counting.
#[derive(Debug, Clone)]
pub struct ApproxCountingLimit {
    table: Arc<InverseCdfTable>,
}

impl Default for ApproxCountingLimit {
    fn default() -> Self {
        Self::new()
    }
}

impl ApproxCountingLimit {
    pub fn new() -> Self {
        static TABLE: OnceLock<Arc<InverseCdfTable>> = OnceLock::new();
        let table = TABLE
            .get_or_init(|| Arc::new(InverseCdfTable::build(cdf_u, -8.0, 10.0, TABLE_POINTS)))
            .clone();
        Self { table }
    }

    pub fn cumulants(&self, order: usize) -> Vec<f64> {
        cumulants_u(order)
    }

    fn quantile(&self, rng: &mut dyn RngCore) -> f64 {
        self.table.quantile(rng.random::<f64>())
    }
}

impl CharacteristicModel for ApproxCountingLimit {
    fn name(&self) -> String {
        "approx-counting".into()
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        psi_u(Complex64::new(0.0, t))
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        if order > 1 {
            return cauchy_phi_lattice(self, n, order);
        }
        let z = lattice_z(n);
        let g = gamma_complex(z)?;
        let mut out = vec![g];
        if order == 1 {
            let dlog = -constants().alpha - digamma(z)? / LN2;
            out.push(Complex64::new(0.0, 1.0) * g * dlog);
        }
        Ok(out)
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        psi_u(t)
    }

    fn strip(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn decay_exponent(&self) -> f64 {
        EXPONENTIAL_DECAY
    }

    fn max_moment_order(&self) -> usize {
        4
    }

    fn raw_moments(&self) -> Vec<f64> {
        cumulants_to_moments(&cumulants_u(4))
    }

    fn cdf(&self, x: f64) -> Option<f64> {
        Some(cdf_u(x))
    }

    fn sf(&self, x: f64) -> Option<f64> {
        Some(if x > 0.0 { sf_u(x) } else { 1.0 - cdf_u(x) })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        Some(self.quantile(rng))
    }
}

/// Limit law of successful-search cost: `X = X_u − Z/ln 2 + 1` with `X_u` the
/// approximate-counting limit and `Z ~ Exp(1)` independent.
#[derive(Debug, Clone, Default)]
pub struct SuccessfulSearchLimit {
    inner: ApproxCountingLimit,
}

impl SuccessfulSearchLimit {
    pub fn new() -> Self {
        Self {
            inner: ApproxCountingLimit::new(),
        }
    }

    /// `G(y) = (1 − e^{−y})/y`.
    fn g(y: f64) -> f64 {
        if y < 1e-8 {
            1.0 - 0.5 * y
        } else {
            -(-y).exp_m1() / y
        }
    }

    /// `1 − F(x) = (1/Q) Σ_i R_i (1 − G(2^{i+1−x}))`.
    fn survival(x: f64) -> f64 {
        let c = constants();
        let mut s = 0.0;
        for (i, ri) in c.r.iter().enumerate().rev() {
            s += ri * Self::one_minus_g(2f64.powf(i as f64 + 1.0 - x));
        }
        (s / c.q).clamp(0.0, 1.0)
    }

    /// `1 − G(y) = (y − 1 + e^{−y})/y`.
    fn one_minus_g(y: f64) -> f64 {
        if y < 1e-4 {
            y / 2.0 - y * y / 6.0 + y * y * y / 24.0
        } else {
            (y + (-y).exp_m1()) / y
        }
    }

    pub fn cumulants(&self, order: usize) -> Vec<f64> {
        let mut k = cumulants_u(order);
        for (idx, kr) in k.iter_mut().enumerate() {
            let r = idx + 1;
            let fact: f64 = (1..r).map(|j| j as f64).product();
            *kr += (-1.0 / LN2).powi(r as i32) * fact;
            if r == 1 {
                *kr += 1.0;
            }
        }
        k
    }
}

impl CharacteristicModel for SuccessfulSearchLimit {
    fn name(&self) -> String {
        "successful-search".into()
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        self.psi(Complex64::new(0.0, t))
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        if order > 1 {
            return cauchy_phi_lattice(self, n, order);
        }
        let z = lattice_z(n);
        let u = Complex64::new(0.0, std::f64::consts::TAU * n as f64);
        let v = gamma_complex(z)? / (1.0 + u / LN2);
        let mut out = vec![v];
        if order == 1 {
            let dlog = 1.0 - constants().alpha - digamma(z)? / LN2 - 1.0 / (LN2 + u);
            out.push(Complex64::new(0.0, 1.0) * v * dlog);
        }
        Ok(out)
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        if t.re <= -LN2 {
            return Err(Error::StripViolation(t));
        }
        let et = Complex64::from_polar(t.re.exp(), t.im);
        Ok(et * psi_u(t)? / (1.0 + t / LN2))
    }

    fn strip(&self) -> (f64, f64) {
        (-LN2, f64::INFINITY)
    }

    fn decay_exponent(&self) -> f64 {
        EXPONENTIAL_DECAY
    }

    fn max_moment_order(&self) -> usize {
        4
    }

    fn raw_moments(&self) -> Vec<f64> {
        cumulants_to_moments(&self.cumulants(4))
    }

    /// `F(x) = (1/Q) Σ_i R_i G(2^{i+1−x})`; for `x > 0` through
    /// `1 − F = (1/Q) Σ_i R_i (1 − G)` since `Σ_i R_i = Q`.
    fn cdf(&self, x: f64) -> Option<f64> {
        if x > 0.0 {
            return Some(1.0 - Self::survival(x));
        }
        let c = constants();
        let mut s = 0.0;
        for (i, ri) in c.r.iter().enumerate().rev() {
            s += ri * Self::g(2f64.powf(i as f64 + 1.0 - x));
        }
        Some((s / c.q).clamp(0.0, 1.0))
    }

    fn sf(&self, x: f64) -> Option<f64> {
        if x > 0.0 {
            Some(Self::survival(x))
        } else {
            self.cdf(x).map(|f| 1.0 - f)
        }
    }

    fn density(&self, x: f64) -> Option<f64> {
        let c = constants();
        let mut s = 0.0;
        for (i, ri) in c.r.iter().enumerate().rev() {
            let y = 2f64.powf(i as f64 + 1.0 - x);
            let term = if y < 1e-4 {
                y / 2.0 - y * y / 3.0
            } else {
                (1.0 - (-y).exp() * (1.0 + y)) / y
            };
            s += ri * term;
        }
        Some((LN2 * s / c.q).max(0.0))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        let xu = self.inner.quantile(rng);
        let z: f64 = Exp1.sample(rng);
        Some(xu - z / LN2 + 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_at_poles() {
        let m = ApproxCountingLimit::new();
        for (k, want) in [(1u32, LN2), (2, LN2), (3, LN2 * 1.5)] {
            let got = m.psi(Complex64::new(k as f64 * LN2, 0.0)).unwrap();
            assert!((got.re - want).abs() < 1e-12, "k={k}: {got}");
        }
        // the expansion inside the guard and the raw product outside it join up
        let inside = psi_u(Complex64::new(2.0 * LN2 + 0.999e-6, 0.0)).unwrap();
        let outside = psi_u_raw(Complex64::new(2.0 * LN2 + 1.001e-6, 0.0)).unwrap();
        assert!((inside - outside).norm() < 1e-8, "{inside} vs {outside}");
    }

    #[test]
    fn psi_vanishes_off_axis_at_pole_heights() {
        let m = ApproxCountingLimit::new();
        for k in 1..=3 {
            for n in [1i64, -2] {
                let t = Complex64::new(k as f64 * LN2, std::f64::consts::TAU * n as f64);
                assert!(m.psi(t).unwrap().norm() < 1e-14);
            }
        }
    }

    #[test]
    fn mean_formula() {
        let m = ApproxCountingLimit::new();
        let ex = EULER_GAMMA / LN2 - constants().alpha;
        assert!((m.raw_moments()[0] - ex).abs() < 1e-14);
        let h = 1e-3;
        let d = (m.psi(Complex64::new(h, 0.0)).unwrap() - m.psi(Complex64::new(-h, 0.0)).unwrap()).re / (2.0 * h);
        assert!((d - ex).abs() < 1e-6);
    }

    #[test]
    fn lattice_closed_forms_match_contour() {
        for model in [
            Box::new(ApproxCountingLimit::new()) as Box<dyn CharacteristicModel>,
            Box::new(SuccessfulSearchLimit::new()),
        ] {
            let a = model.phi_lattice(1, 1).unwrap();
            let b = cauchy_phi_lattice(model.as_ref(), 1, 1).unwrap();
            for k in 0..=1 {
                assert!((a[k] - b[k]).norm() < 1e-10 * a[k].norm(), "{} k={k}: {} vs {}", model.name(), a[k], b[k]);
            }
        }
    }

    #[test]
    fn cdf_limits() {
        let m = ApproxCountingLimit::new();
        assert!(m.cdf(-10.0).unwrap() < 1e-200);
        assert!(1.0 - m.cdf(10.0).unwrap() < 2f64.powi(-10));
        let s = SuccessfulSearchLimit::new();
        assert!(s.cdf(-20.0).unwrap() < 1e-5);
        assert!((1.0 - s.cdf(30.0).unwrap()) < 1e-12);
    }
}

use num_complex::Complex64;
use rand::RngCore;
use rand_distr::{Distribution, Exp1};

use super::EXPONENTIAL_DECAY;
use crate::model::{cauchy_phi_lattice, CharacteristicModel};
use crate::oracle::cumulants_to_moments;
use crate::special_fn::{digamma, gamma_complex, trigamma, zeta_int, EULER_GAMMA};
use crate::{Error, Result};

/// `X = cY` with `Y` standard Gumbel, `P(Y ≤ y) = exp(−e^{−y})`.
#[derive(Debug, Clone)]
pub struct ScaledGumbel {
    pub c: f64,
}

impl ScaledGumbel {
    pub fn new(c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidArgument(format!("Gumbel scale must be positive, got {c}")));
        }
        Ok(Self { c })
    }

    pub fn cumulants(&self, order: usize) -> Vec<f64> {
        (1..=order)
            .map(|r| {
                if r == 1 {
                    self.c * EULER_GAMMA
                } else {
                    let fact: f64 = (1..r).map(|j| j as f64).product();
                    self.c.powi(r as i32) * fact * zeta_int(r as u32)
                }
            })
            .collect()
    }
}

impl CharacteristicModel for ScaledGumbel {
    fn name(&self) -> String {
        format!("gumbel:{}", self.c)
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        gamma_complex(Complex64::new(1.0, -self.c * t))
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        if order > 2 {
            return cauchy_phi_lattice(self, n, order);
        }
        let z = Complex64::new(1.0, -self.c * std::f64::consts::TAU * n as f64);
        let g = gamma_complex(z)?;
        let mut out = vec![g];
        if order >= 1 {
            let d = digamma(z)?;
            let k = Complex64::new(0.0, -self.c);
            out.push(k * g * d);
            if order >= 2 {
                out.push(k * k * g * (d * d + trigamma(z)?));
            }
        }
        Ok(out)
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        let (_, b) = self.strip();
        if t.re >= b {
            return Err(Error::StripViolation(t));
        }
        gamma_complex(1.0 - self.c * t)
    }

    fn strip(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, 1.0 / self.c)
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

    fn cdf(&self, x: f64) -> Option<f64> {
        Some((-(-x / self.c).exp()).exp())
    }

    fn sf(&self, x: f64) -> Option<f64> {
        Some(-(-(-x / self.c).exp()).exp_m1())
    }

    fn density(&self, x: f64) -> Option<f64> {
        let e = (-x / self.c).exp();
        Some(e * (-e).exp() / self.c)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        let e: f64 = Exp1.sample(rng);
        Some(-self.c * e.ln())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_and_variance() {
        let g = ScaledGumbel::new(1.0).unwrap();
        let m = g.raw_moments();
        assert!((m[0] - EULER_GAMMA).abs() < 1e-15);
        let var = m[1] - m[0] * m[0];
        assert!((var - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    }

    #[test]
    fn closed_form_derivatives_match_contour() {
        let g = ScaledGumbel::new(1.0 / std::f64::consts::LN_2).unwrap();
        let a = g.phi_lattice(1, 2).unwrap();
        let b = cauchy_phi_lattice(&g, 1, 2).unwrap();
        for k in 0..=2 {
            assert!((a[k] - b[k]).norm() < 1e-12 * a[k].norm(), "k={k}: {} vs {}", a[k], b[k]);
        }
    }
}

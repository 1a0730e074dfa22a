use num_complex::Complex64;
use rand::{Rng, RngCore};

use crate::model::CharacteristicModel;
use crate::numeric::solve_increasing;
use crate::special_fn::{bernoulli_number, trigamma, zeta_int};
use crate::{Error, Result};

/// Highest power of `1/u` kept in the lattice expansion of ψ.
const LAURENT_ORDER: usize = 16;

/// Limit law with density `h(x) = e^{−x}(e^{−x} − 1 + x)/(1 − e^{−x})²` on
/// `x ≥ 0`, distribution function `1 − x/(e^x − 1)` and
/// `ψ(t) = 1 + tΨ′(1 − t)`.
#[derive(Debug, Clone, Default)]
pub struct Aldous;

impl Aldous {
    /// `P(X > x) = x/(e^x − 1)`.
    pub fn survival(x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            x / x.exp_m1()
        }
    }

    /// Coefficients `d_j` of `ψ(u) ~ Σ_{j≥1} d_j u^{−j}` as `|u| → ∞` along the
    /// imaginary axis, from the asymptotic series of Ψ′.
    fn psi_laurent() -> Vec<f64> {
        // Ψ′(1 + w) ~ Σ_k b_k w^{−k}: b_1 = 1, b_2 = −1/2, b_{2k+1} = B_{2k}
        let b = |k: usize| -> f64 {
            match k {
                1 => 1.0,
                2 => -0.5,
                k if k % 2 == 1 => bernoulli_number(k - 1),
                _ => 0.0,
            }
        };
        let mut d = vec![0.0; LAURENT_ORDER + 1];
        for (j, dj) in d.iter_mut().enumerate().skip(1) {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            *dj = sign * b(j + 1);
        }
        d
    }
}

impl CharacteristicModel for Aldous {
    fn name(&self) -> String {
        "aldous".into()
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        self.psi(Complex64::new(0.0, t))
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        if t.re >= 1.0 {
            return Err(Error::StripViolation(t));
        }
        Ok(1.0 + t * trigamma(1.0 - t)?)
    }

    fn strip(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, 1.0)
    }

    fn decay_exponent(&self) -> f64 {
        1.0
    }

    fn max_moment_order(&self) -> usize {
        2
    }

    /// `EX^r = r! r ζ(r + 1)`.
    fn raw_moments(&self) -> Vec<f64> {
        vec![zeta_int(2), 4.0 * zeta_int(3)]
    }

    fn sf(&self, x: f64) -> Option<f64> {
        Some(if x <= 0.0 { 1.0 } else { Self::survival(x) })
    }

    fn cdf(&self, x: f64) -> Option<f64> {
        Some(if x <= 0.0 {
            0.0
        } else if x < 1e-3 {
            x / 2.0 - x * x / 12.0 + x.powi(4) / 720.0
        } else {
            1.0 - Self::survival(x)
        })
    }

    fn density(&self, x: f64) -> Option<f64> {
        Some(if x < 0.0 {
            0.0
        } else if x < 0.01 {
            let x2 = x * x;
            0.5 - x / 6.0 + x * x2 / 180.0 - x * x2 * x2 / 5040.0
        } else {
            let e = (-x).exp();
            let den = -(-x).exp_m1();
            e * (e - 1.0 + x) / (den * den)
        })
    }

    /// Inverts `x/(e^x − 1) = V` for uniform `V`.
    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        let v: f64 = 1.0 - rng.random::<f64>(); // (0, 1]
        let mut hi = 1.0;
        while Self::survival(hi) > v {
            hi *= 2.0;
        }
        Some(solve_increasing(|x| v - Self::survival(x), 0.0, hi, 1e-15))
    }

    fn lattice_laurent(&self, order: usize) -> Option<Vec<Vec<f64>>> {
        let mut out = vec![Self::psi_laurent()];
        for r in 1..=order {
            let prev = &out[r - 1];
            let mut next = vec![0.0; prev.len() + 1];
            for (j, &c) in prev.iter().enumerate() {
                next[j + 1] = -(j as f64) * c;
            }
            out.push(next);
        }
        Some(out)
    }
}

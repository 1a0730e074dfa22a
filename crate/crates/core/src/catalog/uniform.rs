use num_complex::Complex64;
use rand::{Rng, RngCore};

use crate::model::CharacteristicModel;
use crate::rounding::window;
use crate::special_fn::{f_derivatives, f_derivatives_lattice, lattice_laurent};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(())
}

fn binomial(m: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (m - j) as f64 / (j + 1) as f64)
}

/// `N^r f^{(r)}(Nu)` at `u = 2πin`, as values and as polynomials in `1/u`.
fn scaled_lattice(n_scale: f64, n: i64, order: usize) -> Vec<Complex64> {
    let f = if n == 0 {
        f_derivatives(Complex64::new(0.0, 0.0), order)
    } else {
        f_derivatives_lattice(n * n_scale as i64, order)
    };
    f.iter().enumerate().map(|(r, v)| v * n_scale.powi(r as i32)).collect()
}

fn scaled_laurent(n_scale: f64, order: usize) -> Vec<Vec<f64>> {
    lattice_laurent(order)
        .into_iter()
        .enumerate()
        .map(|(r, p)| p.iter().enumerate().map(|(j, c)| c * n_scale.powi(r as i32 - j as i32)).collect())
        .collect()
}

/// Uniform distribution on `(0, N)`: `φ(t) = (e^{iNt} − 1)/(iNt)`.
#[derive(Debug, Clone)]
pub struct UniformN {
    pub n: u32,
}

impl UniformN {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n })
    }
}

impl CharacteristicModel for UniformN {
    fn name(&self) -> String {
        format!("uniform:{}", self.n)
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        Ok(window(self.n as f64 * t))
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        let psi = scaled_lattice(self.n as f64, n, order);
        Ok(psi.iter().enumerate().map(|(r, v)| I.powi(r as i32) * v).collect())
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        Ok(f_derivatives(self.n as f64 * t, 0)[0])
    }

    fn strip(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn decay_exponent(&self) -> f64 {
        1.0
    }

    fn max_moment_order(&self) -> usize {
        4
    }

    fn raw_moments(&self) -> Vec<f64> {
        let n = self.n as f64;
        (1..=4).map(|r| n.powi(r) / (r + 1) as f64).collect()
    }

    fn cdf(&self, x: f64) -> Option<f64> {
        Some((x / self.n as f64).clamp(0.0, 1.0))
    }

    fn density(&self, x: f64) -> Option<f64> {
        Some(if (0.0..=self.n as f64).contains(&x) { 1.0 / self.n as f64 } else { 0.0 })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        Some(self.n as f64 * rng.random::<f64>())
    }

    fn lattice_laurent(&self, order: usize) -> Option<Vec<Vec<f64>>> {
        Some(scaled_laurent(self.n as f64, order))
    }
}

/// `X = Y + U` with `Y ~ U(0, N)`, `U ~ U(0, 1)` independent, i.e. a uniform
/// integer on `{0, …, N−1}` plus two independent `U(0, 1)` variables.
#[derive(Debug, Clone)]
pub struct UniformPlusTwoU {
    pub n: u32,
}

impl UniformPlusTwoU {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n })
    }

    /// `∫_{−∞}^{y} clamp(s, 0, N) ds`.
    fn ramp_integral(&self, y: f64) -> f64 {
        let n = self.n as f64;
        if y <= 0.0 {
            0.0
        } else if y <= n {
            0.5 * y * y
        } else {
            0.5 * n * n + n * (y - n)
        }
    }
}

impl CharacteristicModel for UniformPlusTwoU {
    fn name(&self) -> String {
        format!("uniform2u:{}", self.n)
    }

    fn phi(&self, t: f64) -> Result<Complex64> {
        Ok(window(self.n as f64 * t) * window(t))
    }

    fn phi_lattice(&self, n: i64, order: usize) -> Result<Vec<Complex64>> {
        let a = scaled_lattice(self.n as f64, n, order);
        let b = scaled_lattice(1.0, n, order);
        Ok((0..=order)
            .map(|r| {
                let psi_r: Complex64 = (0..=r).map(|s| binomial(r, s) * a[s] * b[r - s]).sum();
                I.powi(r as i32) * psi_r
            })
            .collect())
    }

    fn has_psi(&self) -> bool {
        true
    }

    fn psi(&self, t: Complex64) -> Result<Complex64> {
        Ok(f_derivatives(self.n as f64 * t, 0)[0] * f_derivatives(t, 0)[0])
    }

    fn strip(&self) -> (f64, f64) {
        (f64::NEG_INFINITY, f64::INFINITY)
    }

    fn decay_exponent(&self) -> f64 {
        2.0
    }

    fn max_moment_order(&self) -> usize {
        4
    }

    fn raw_moments(&self) -> Vec<f64> {
        let n = self.n as f64;
        (1..=4usize)
            .map(|r| {
                (0..=r)
                    .map(|k| binomial(r, k) * n.powi(k as i32) / (k + 1) as f64 / (r - k + 1) as f64)
                    .sum()
            })
            .collect()
    }

    fn cdf(&self, x: f64) -> Option<f64> {
        Some(((self.ramp_integral(x) - self.ramp_integral(x - 1.0)) / self.n as f64).clamp(0.0, 1.0))
    }

    fn density(&self, x: f64) -> Option<f64> {
        let n = self.n as f64;
        Some((x.clamp(0.0, n) - (x - 1.0).clamp(0.0, n)) / n)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Option<f64> {
        let y = self.n as f64 * rng.random::<f64>();
        Some(y + rng.random::<f64>())
    }

    fn lattice_laurent(&self, order: usize) -> Option<Vec<Vec<f64>>> {
        let a = scaled_laurent(self.n as f64, order);
        let b = scaled_laurent(1.0, order);
        Some(
            (0..=order)
                .map(|r| {
                    let mut acc: Vec<f64> = Vec::new();
                    for s in 0..=r {
                        let prod = crate::rounding::laurent_mul(&a[s], &b[r - s]);
                        if acc.len() < prod.len() {
                            acc.resize(prod.len(), 0.0);
                        }
                        for (k, v) in prod.iter().enumerate() {
                            acc[k] += binomial(r, s) * v;
                        }
                    }
                    acc
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_values() {
        let u = UniformN::new(3).unwrap();
        for n in [1i64, -2, 5] {
            assert_eq!(u.phi_lattice(n, 0).unwrap()[0].norm(), 0.0);
        }
        let v = UniformPlusTwoU::new(2).unwrap();
        let d = v.phi_lattice(1, 2).unwrap();
        assert_eq!(d[0].norm(), 0.0);
        assert_eq!(d[1].norm(), 0.0);
        let t = std::f64::consts::TAU;
        assert!((d[2] - Complex64::new(2.0 / (t * t), 0.0)).norm() < 1e-16);
    }

    #[test]
    fn unit_uniform_moments() {
        let m = UniformN::new(1).unwrap().raw_moments();
        assert_eq!(m[0], 0.5);
        assert!((m[1] - m[0] * m[0] - 1.0 / 12.0).abs() < 1e-16);
    }

    #[test]
    fn cdf_of_sum_is_piecewise_quadratic() {
        let v = UniformPlusTwoU::new(2).unwrap();
        assert_eq!(v.cdf(0.0), Some(0.0));
        assert_eq!(v.cdf(3.0), Some(1.0));
        assert!((v.cdf(1.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((v.cdf(0.5).unwrap() - 0.0625).abs() < 1e-15);
    }
}

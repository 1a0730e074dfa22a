use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::{cos_pi, is_nonpositive_integer, sin_pi};
use crate::{Error, Result};

/// Below this modulus the recurrence shifts z upward before the asymptotic
/// expansion is applied.
const ASYMPTOTIC_RADIUS: f64 = 15.0;

// B_2, B_4, ..., B_16
const BERNOULLI_EVEN: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

fn pole(function: &'static str, at: Complex64) -> Error {
    Error::Pole { function, at }
}

/// Digamma Ψ(z) = Γ′(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole("Ψ", z));
    }
    if z.re < 0.5 {
        // Ψ(1 − z) − Ψ(z) = π cot(πz)
        let cot = cos_pi(z) / sin_pi(z);
        return Ok(digamma(1.0 - z)? - cot * PI);
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < ASYMPTOTIC_RADIUS {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        series += pow * (*b / (2.0 * (k + 1) as f64));
        pow *= inv2;
    }
    Ok(acc + z.ln() - 0.5 / z - series)
}

/// Trigamma Ψ′(z) = Σ_{k≥0} (z + k)^{−2}.
pub fn trigamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(pole("Ψ′", z));
    }
    if z.re < 0.5 {
        // Ψ′(1 − z) + Ψ′(z) = π² / sin²(πz)
        let s = sin_pi(z);
        return Ok(PI * PI / (s * s) - trigamma(1.0 - z)?);
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < ASYMPTOTIC_RADIUS {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut pow = inv2 * inv;
    let mut series = inv + 0.5 * inv2;
    for b in BERNOULLI_EVEN {
        series += pow * b;
        pow *= inv2;
    }
    Ok(acc + series)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn digamma_at_one_is_minus_euler() {
        let v = digamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re + EULER_GAMMA).abs() < 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn trigamma_basel() {
        let v = trigamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-14);
        let v2 = trigamma(Complex64::new(2.0, 0.0)).unwrap();
        assert!((v2.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn trigamma_reflection_identity_at_one_plus_i() {
        // Ψ′(1+z) + Ψ′(1−z) = −z^{−2} + π²/sin²(πz) at z = i
        let i = Complex64::new(0.0, 1.0);
        let lhs = trigamma(1.0 + i).unwrap() + trigamma(1.0 - i).unwrap();
        let expected = 1.0 - PI * PI / PI.sinh().powi(2);
        assert!((lhs.re - expected).abs() < 1e-13);
        assert!(lhs.im.abs() < 1e-14);
    }

    #[test]
    fn digamma_recurrence_off_axis() {
        let z = Complex64::new(-3.7, 12.0);
        let lhs = digamma(z + 1.0).unwrap();
        let rhs = digamma(z).unwrap() + 1.0 / z;
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn poles() {
        assert!(digamma(Complex64::new(-2.0, 0.0)).is_err());
        assert!(trigamma(Complex64::new(0.0, 0.0)).is_err());
    }
}

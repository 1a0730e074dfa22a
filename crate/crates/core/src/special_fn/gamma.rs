use num_complex::Complex64;
use std::f64::consts::PI;

use crate::{Error, Result};

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey's coefficients).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_049e-4,
    2.174_396_181_152_126e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162e-6,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Largest real part of ln Γ whose exponential is still finite.
const LN_MAX: f64 = 709.78;

pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `sin(πz)` with the real part reduced by the nearest integer first, so that
/// values near the zeros keep full relative accuracy.
pub(crate) fn sin_pi(z: Complex64) -> Complex64 {
    let k = z.re.round();
    let r = Complex64::new(z.re - k, z.im);
    let s = (r * PI).sin();
    if (k as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

pub(crate) fn cos_pi(z: Complex64) -> Complex64 {
    let k = z.re.round();
    let r = Complex64::new(z.re - k, z.im);
    let c = (r * PI).cos();
    if (k as i64).rem_euclid(2) == 0 {
        c
    } else {
        -c
    }
}

/// ln Γ(z) for Re z ≥ 1/2 (principal branch of the Lanczos form).
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let x = z - 1.0;
    let mut a = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += *c / (x + k as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (x + 0.5) * t.ln() - t + HALF_LN_2PI + a.ln()
}

/// Logarithm of the complex Gamma function, up to a multiple of 2πi.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "Γ",
            at: z,
        });
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        // Γ(z) Γ(1 − z) = π / sin(πz)
        let s = sin_pi(z);
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    }
}

/// Γ(z) for complex `z`; relative error below 1e-13 for |Im z| ≤ 60.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite argument {z}")));
    }
    let lg = ln_gamma_complex(z)?;
    if lg.re > LN_MAX {
        return Err(Error::Overflow("Γ"));
    }
    if z.im == 0.0 && z.re >= 0.5 && z.re <= 170.0 && z.re == z.re.round() {
        // exact factorials
        let n = z.re as u32;
        let f = (1..n).fold(1.0f64, |acc, k| acc * k as f64);
        return Ok(Complex64::new(f, 0.0));
    }
    let v = lg.exp();
    if z.im == 0.0 {
        // real axis: drop the spurious imaginary part left by the logarithm branch
        let sign = if z.re > 0.0 {
            1.0
        } else {
            // sign of Γ on (−k−1, −k) is (−1)^{k+1}
            let k = (-z.re).floor() as i64;
            if k % 2 == 0 {
                -1.0
            } else {
                1.0
            }
        };
        return Ok(Complex64::new(sign * lg.re.exp(), 0.0));
    }
    Ok(v)
}

/// Γ of a real argument.
pub fn gamma_real(x: f64) -> Result<f64> {
    gamma_complex(Complex64::new(x, 0.0)).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn small_factorials() {
        assert_eq!(gamma_real(1.0).unwrap(), 1.0);
        assert_eq!(gamma_real(5.0).unwrap(), 24.0);
        assert!((gamma_real(0.5).unwrap() - PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn modulus_on_imaginary_axis() {
        // |Γ(i)|² = π / sinh π
        let g = gamma_complex(Complex64::new(0.0, 1.0)).unwrap();
        let expected = PI / PI.sinh();
        assert!((g.norm_sqr() - expected).abs() / expected < 1e-13);
    }

    #[test]
    fn poles_are_errors() {
        for k in 0..5 {
            let z = Complex64::new(-(k as f64), 0.0);
            assert!(matches!(gamma_complex(z), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            gamma_complex(Complex64::new(200.0, 0.5)),
            Err(Error::Overflow("Γ"))
        );
    }

    #[test]
    fn negative_real_arguments() {
        // Γ(−1/2) = −2√π, Γ(−3/2) = 4√π/3
        let a = gamma_real(-0.5).unwrap();
        assert!((a + 2.0 * PI.sqrt()).abs() < 1e-14);
        let b = gamma_real(-1.5).unwrap();
        assert!((b - 4.0 * PI.sqrt() / 3.0).abs() < 1e-14);
    }

    #[test]
    fn reflection_matches_recurrence_across_half() {
        let z = Complex64::new(0.3, 2.5);
        let lhs = gamma_complex(z + 1.0).unwrap();
        let rhs = z * gamma_complex(z).unwrap();
        assert!(rel(lhs, rhs) < 1e-14);
    }
}

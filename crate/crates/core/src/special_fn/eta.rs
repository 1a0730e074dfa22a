use num_complex::Complex64;

use super::gamma::{gamma_complex, is_nonpositive_integer};
use crate::series::{SeriesControl, SeriesTail};
use crate::{Error, Result};

/// Hard cap on factors/terms; every product and series here converges
/// geometrically with ratio 1/2.
const MAX_TERMS: usize = 2000;

/// η(z) = ∏_{k≥1} (1 − z/2^k). `tail_bound` is relative: the omitted factors
/// multiply the partial product by at most `exp(|z|/2^K)` deviation from one.
pub fn eta_product(z: Complex64, ctrl: &SeriesControl) -> Result<SeriesTail> {
    let mut p = Complex64::new(1.0, 0.0);
    let mut scale = 0.5f64;
    for k in 1..=MAX_TERMS {
        p *= 1.0 - z * scale;
        if !p.re.is_finite() || !p.im.is_finite() {
            return Err(Error::Overflow("η"));
        }
        let bound = (z.norm() * scale).exp_m1();
        if bound <= ctrl.tol || p == Complex64::new(0.0, 0.0) {
            return Ok(SeriesTail {
                value: p,
                terms_used: k,
                tail_bound: if p.norm() == 0.0 { 0.0 } else { bound },
            });
        }
        scale *= 0.5;
    }
    Err(Error::NotConverged {
        terms: MAX_TERMS,
        tail_bound: (z.norm() * scale).exp_m1(),
    })
}

/// η′(z)/η(z) = −Σ_{k≥1} 1/(2^k − z).
pub fn eta_log_derivative(z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = 2.0f64;
    for _ in 0..MAX_TERMS {
        let d = pow - z;
        if d.norm() == 0.0 {
            return Err(Error::Pole {
                function: "η′/η",
                at: z,
            });
        }
        let term = 1.0 / d;
        acc -= term;
        if term.norm() < 1e-18 * acc.norm() && pow > 4.0 * z.norm() {
            return Ok(acc);
        }
        pow *= 2.0;
    }
    Ok(acc)
}

/// Coefficients of η's power series.
#[derive(Debug, Clone, PartialEq)]
pub struct RqCoefficients {
    /// R_0, …, R_{j_max}
    pub r: Vec<f64>,
    /// Q = Σ_j R_j
    pub q: f64,
    pub q_tail_bound: f64,
}

/// R_j = (−1)^j ∏_{k=1}^{j} (2^k − 1)^{−1} for j ≤ `j_max`, and their full sum Q.
pub fn rq_coefficients(j_max: usize) -> RqCoefficients {
    let mut r = Vec::with_capacity(j_max + 1);
    let mut rj = 1.0f64;
    let mut q = 0.0f64;
    let mut j = 0usize;
    let mut tail;
    loop {
        if j <= j_max {
            r.push(rj);
        }
        q += rj;
        let next = -rj / ((2.0f64).powi(j as i32 + 1) - 1.0);
        // |R_{j+2}/R_{j+1}| ≤ 1/3, so the remainder is below 1.5 |R_{j+1}|
        tail = 1.5 * next.abs();
        j += 1;
        rj = next;
        if j > j_max && (tail < 1e-18 * q.abs() || rj == 0.0) {
            break;
        }
    }
    RqCoefficients {
        r,
        q,
        q_tail_bound: tail,
    }
}

/// g(z) = Σ_{j≥1} (−1)^{j−1} Γ(z + j) / (j! (2^j − 1)).
///
/// Terms are generated by their ratio `−(z + j)/(j + 1) · (2^j − 1)/(2^{j+1} − 1)`,
/// which tends to −1/2. The series stops once the geometric remainder bound is
/// below `tol · |value|`; `tail_bound` is reported relative to `|value|`.
pub fn g_series(z: Complex64, ctrl: &SeriesControl) -> Result<SeriesTail> {
    for j in 1..=3usize {
        let s = z + j as f64;
        if is_nonpositive_integer(s) {
            return Err(Error::Pole {
                function: "g",
                at: z,
            });
        }
    }
    if z.im == 0.0 && z.re < 0.0 && z.re == z.re.round() {
        return Err(Error::Pole {
            function: "g",
            at: z,
        });
    }
    let mut term = gamma_complex(z + 1.0)?; // Γ(z+1)/(1!·(2−1))
    let mut sum = term;
    let zn = z.norm();
    for j in 1..MAX_TERMS {
        let jf = j as f64;
        let ratio = -(z + jf) / (jf + 1.0) * ((2f64.powi(j as i32) - 1.0) / (2f64.powi(j as i32 + 1) - 1.0));
        term *= ratio;
        sum += term;
        // sup of the remaining ratios is below (1 + |z|/(j+2))/2
        let r = 0.5 * (1.0 + zn / (jf + 2.0));
        if r < 1.0 {
            let bound = term.norm() * r / (1.0 - r);
            if bound <= ctrl.tol * sum.norm() || term.norm() == 0.0 {
                let tail = if sum.norm() > 0.0 { bound / sum.norm() } else { 0.0 };
                return Ok(SeriesTail {
                    value: sum,
                    terms_used: j + 1,
                    tail_bound: tail,
                });
            }
        }
    }
    Err(Error::NotConverged {
        terms: MAX_TERMS,
        tail_bound: f64::INFINITY,
    })
}

/// g(z) from `Γ(z) Σ_k (1 − (1 + 2^{−k})^{−z})`, with the z → 0 limit
/// `Σ_k ln(1 + 2^{−k})`. Independent of [`g_series`]; used to cross-check it.
pub fn g_log_series(z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let at_zero = z.norm() == 0.0;
    let mut h = 0.5f64;
    for _ in 0..MAX_TERMS {
        let l = h.ln_1p();
        let term = if at_zero {
            Complex64::new(l, 0.0)
        } else {
            // 1 − e^{−z ln(1+h)}, computed without cancellation
            let x = -z * l;
            -complex_expm1(x)
        };
        acc += term;
        if term.norm() < 1e-18 * acc.norm().max(1e-300) {
            break;
        }
        h *= 0.5;
    }
    if at_zero {
        Ok(acc)
    } else {
        Ok(gamma_complex(z)? * acc)
    }
}

pub(crate) fn complex_expm1(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        // e^{x+iy} − 1 = (e^x − 1) cos y − 2 sin²(y/2) + i e^x sin y
        let em1 = z.re.exp_m1();
        let s = (0.5 * z.im).sin();
        Complex64::new(em1 * z.im.cos() - 2.0 * s * s, z.re.exp() * z.im.sin())
    } else {
        z.exp() - 1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ETA_ONE: f64 = 0.288_788_095_086_602_4;

    fn ctrl() -> SeriesControl {
        SeriesControl::with_tol(1e-15)
    }

    #[test]
    fn eta_special_points() {
        let c = ctrl();
        assert_eq!(eta_product(Complex64::new(0.0, 0.0), &c).unwrap().value.re, 1.0);
        assert_eq!(eta_product(Complex64::new(2.0, 0.0), &c).unwrap().value.norm(), 0.0);
        let e1 = eta_product(Complex64::new(1.0, 0.0), &c).unwrap();
        assert!((e1.value.re - ETA_ONE).abs() < 1e-15);
    }

    #[test]
    fn rq_first_values() {
        let rq = rq_coefficients(4);
        assert_eq!(rq.r[0], 1.0);
        assert_eq!(rq.r[1], -1.0);
        assert!((rq.r[2] - 1.0 / 3.0).abs() < 1e-16);
        assert!((rq.r[3] + 1.0 / 21.0).abs() < 1e-16);
        assert_eq!(rq.r.len(), 5);
        assert!((rq.q - ETA_ONE).abs() < 1e-15);
    }

    #[test]
    fn g_at_zero_two_routes() {
        let a = g_series(Complex64::new(0.0, 0.0), &ctrl()).unwrap().value;
        let b = g_log_series(Complex64::new(0.0, 0.0)).unwrap();
        assert!((a - b).norm() < 1e-14);
        assert!((a.re - 0.868_876_652_658_555).abs() < 1e-14);
    }

    #[test]
    fn g_at_one_matches_simplified_series() {
        // Γ(1+j)/j! = 1, so g(1) = Σ (−1)^{j−1}/(2^j − 1); brute-force partial sums
        let mut brute = 0.0;
        for j in 1..80 {
            brute += (-1f64).powi(j - 1) / (2f64.powi(j) - 1.0);
        }
        let g = g_series(Complex64::new(1.0, 0.0), &ctrl()).unwrap().value;
        assert!((g.re - brute).abs() < 1e-15);
    }

    #[test]
    fn g_pole() {
        assert!(g_series(Complex64::new(-2.0, 0.0), &ctrl()).is_err());
    }
}

use num_complex::Complex64;

use super::lattice_sum::{phase, resolve, Strategy, BLOCK};
use crate::model::CharacteristicModel;
use crate::series::{power_tail, SeriesControl, SeriesTail};
use crate::special_fn::{complex_expm1, f_derivatives};
use crate::{Error, Result};

/// Below this distance from a lattice point the window factor is evaluated by
/// its power series instead of the closed form.
pub const REMOVABLE_RADIUS: f64 = 0.5;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `w(t) = (e^{it} − 1)/(it)`, equal to 1 at `t = 0`.
pub fn window(t: f64) -> Complex64 {
    f_derivatives(Complex64::new(0.0, t), 0)[0]
}

/// `w̃(t) = w(t) φ(t)`, the characteristic function of `X + U`.
pub fn tilde_phi(model: &dyn CharacteristicModel, t: f64) -> Result<Complex64> {
    Ok(window(t) * model.phi(t)?)
}

/// Summand `n` of the lattice series for `E e^{itX_α}`. `numer` is `e^{it} − 1`.
pub(crate) fn char_term(model: &dyn CharacteristicModel, t: f64, alpha: f64, n: i64, numer: Complex64) -> Result<Complex64> {
    let s = t + std::f64::consts::TAU * n as f64;
    let w = if s.abs() < REMOVABLE_RADIUS {
        f_derivatives(Complex64::new(0.0, s), 0)[0]
    } else {
        numer / (I * s)
    };
    if w == Complex64::new(0.0, 0.0) {
        return Ok(w);
    }
    Ok(phase(n, alpha) * w * model.phi(s)?)
}

/// `E e^{itX_α}` with its truncation record.
pub fn char_rounded_series(model: &dyn CharacteristicModel, t: f64, alpha: f64, ctrl: &SeriesControl) -> Result<SeriesTail> {
    let alpha = alpha.rem_euclid(1.0);
    let delta = model.decay_exponent();
    let numer = complex_expm1(Complex64::new(0.0, t));
    match resolve(ctrl, &model.name(), delta, false)? {
        Strategy::Cesaro(n_fejer) => {
            let n_fejer = n_fejer as i64;
            let half = n_fejer / 2;
            let w_full = (n_fejer + 1) as f64;
            let w_half = (half + 1) as f64;
            let mut full = Complex64::new(0.0, 0.0);
            let mut coarse = Complex64::new(0.0, 0.0);
            for n in -n_fejer..=n_fejer {
                let term = char_term(model, t, alpha, n, numer)?;
                full += term * (1.0 - n.unsigned_abs() as f64 / w_full);
                if n.abs() <= half {
                    coarse += term * (1.0 - n.unsigned_abs() as f64 / w_half);
                }
            }
            Ok(SeriesTail {
                value: full,
                terms_used: n_fejer as usize,
                tail_bound: (full - coarse).norm(),
            })
        }
        Strategy::Adaptive => {
            let p = 1.0 + delta;
            let mut value = char_term(model, t, alpha, 0, numer)?;
            let mut n = 0i64;
            loop {
                let mut c_est = 0.0f64;
                for k in n + 1..=n + BLOCK as i64 {
                    for sgn in [1i64, -1] {
                        let term = char_term(model, t, alpha, sgn * k, numer)?;
                        let s = (t + std::f64::consts::TAU * (sgn * k) as f64).abs();
                        c_est = c_est.max(term.norm() * s.powf(p));
                        value += term;
                    }
                }
                n += BLOCK as i64;
                let tail = if c_est == 0.0 { 0.0 } else { 2.0 * c_est * power_tail(n as usize, t, p) };
                if tail <= ctrl.tol {
                    return Ok(SeriesTail {
                        value,
                        terms_used: n as usize,
                        tail_bound: tail,
                    });
                }
                if n as usize >= ctrl.n_max {
                    return Err(Error::NotConverged {
                        terms: n as usize,
                        tail_bound: tail,
                    });
                }
            }
        }
    }
}

/// `E e^{itX_α} = Σ_n e^{2πinα} w̃(t + 2πn)`.
pub fn char_rounded(model: &dyn CharacteristicModel, t: f64, alpha: f64, ctrl: &SeriesControl) -> Result<Complex64> {
    Ok(char_rounded_series(model, t, alpha, ctrl)?.value)
}

fn mgf_term(model: &dyn CharacteristicModel, t: Complex64, alpha: f64, n: i64, numer: Complex64) -> Result<Complex64> {
    let s = t + Complex64::new(0.0, std::f64::consts::TAU * n as f64);
    let f = if s.norm() < REMOVABLE_RADIUS {
        f_derivatives(s, 0)[0]
    } else {
        numer / s
    };
    Ok(phase(n, alpha) * f * model.psi(s)?)
}

/// `E e^{tX_α} = Σ_n e^{2πinα} ψ̃(t + 2πni)` for `a < Re t < b`.
pub fn mgf_rounded_series(model: &dyn CharacteristicModel, t: Complex64, alpha: f64, ctrl: &SeriesControl) -> Result<SeriesTail> {
    if !model.has_psi() {
        return Err(Error::NoMgf(model.name()));
    }
    let (a, b) = model.strip();
    if !(t.re > a && t.re < b) {
        return Err(Error::StripViolation(t));
    }
    ctrl.validate()?;
    let alpha = alpha.rem_euclid(1.0);
    let delta = model.decay_exponent();
    if delta <= 0.0 {
        return Err(Error::NeedsCesaro {
            model: model.name(),
            decay: delta,
        });
    }
    let numer = complex_expm1(t);
    let p = 1.0 + delta;
    let mut value = mgf_term(model, t, alpha, 0, numer)?;
    let mut n = 0i64;
    loop {
        let mut c_est = 0.0f64;
        for k in n + 1..=n + BLOCK as i64 {
            for sgn in [1i64, -1] {
                let term = mgf_term(model, t, alpha, sgn * k, numer)?;
                let s = (t + Complex64::new(0.0, std::f64::consts::TAU * (sgn * k) as f64)).norm();
                c_est = c_est.max(term.norm() * s.powf(p));
                value += term;
            }
        }
        n += BLOCK as i64;
        let tail = if c_est == 0.0 { 0.0 } else { 2.0 * c_est * power_tail(n as usize, t.norm(), p) };
        if tail <= ctrl.tol {
            return Ok(SeriesTail {
                value,
                terms_used: n as usize,
                tail_bound: tail,
            });
        }
        if n as usize >= ctrl.n_max {
            return Err(Error::NotConverged {
                terms: n as usize,
                tail_bound: tail,
            });
        }
    }
}

pub fn mgf_rounded(model: &dyn CharacteristicModel, t: Complex64, alpha: f64, ctrl: &SeriesControl) -> Result<Complex64> {
    Ok(mgf_rounded_series(model, t, alpha, ctrl)?.value)
}

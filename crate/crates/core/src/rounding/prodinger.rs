//! The Fourier coefficients of the oscillating part of the Patricia variance,
//! assembled from Γ, Γ′, the g-series and a bilinear Γ·Γ sum.

use num_complex::Complex64;

use crate::series::SeriesControl;
use crate::special_fn::{digamma, g_series, gamma_complex, EULER_GAMMA};
use crate::{Error, Result};

/// The four parts of the coefficient and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProdingerParts {
    /// `(2/ln²2) Γ′(−χ_n)`
    pub gamma_prime: Complex64,
    /// `(2γ/ln²2) Γ(−χ_n)`
    pub gamma: Complex64,
    /// `−(2/ln2) Σ_{j≥1} (−1)^{j−1} Γ(j − χ_n)/(j!(2^j − 1))`
    pub g_term: Complex64,
    /// `−(1/ln²2) Σ_{j≠0,n} Γ(−χ_j) Γ(χ_{j−n})`
    pub bilinear: Complex64,
    pub tail_bound: f64,
}

impl ProdingerParts {
    pub fn total(&self) -> Complex64 {
        self.gamma_prime + self.gamma + self.g_term + self.bilinear
    }

    /// Sum with the bilinear part left out.
    pub fn without_bilinear(&self) -> Complex64 {
        self.gamma_prime + self.gamma + self.g_term
    }

    pub fn largest_part(&self) -> f64 {
        [self.gamma_prime, self.gamma, self.g_term, self.bilinear]
            .iter()
            .fold(0.0, |m, z| m.max(z.norm()))
    }
}

/// `χ_n = 2πni/ln 2`.
fn chi(n: i64) -> Complex64 {
    Complex64::new(0.0, std::f64::consts::TAU * n as f64 / std::f64::consts::LN_2)
}

pub fn prodinger_parts(n: i64, ctrl: &SeriesControl) -> Result<ProdingerParts> {
    if n == 0 {
        return Err(Error::InvalidArgument("coefficient index must be nonzero".into()));
    }
    let l2 = std::f64::consts::LN_2;
    let z = -chi(n);
    let g = gamma_complex(z)?;
    let gamma_prime = 2.0 / (l2 * l2) * g * digamma(z)?;
    let gamma = 2.0 * EULER_GAMMA / (l2 * l2) * g;
    let gs = g_series(z, ctrl)?;
    let g_term = -2.0 / l2 * gs.value;

    // |Γ(iy)| decays like e^{−π|y|/2}; widen |j| until a sweep adds nothing
    // above tol relative to the largest term
    let mut bilinear = Complex64::new(0.0, 0.0);
    let mut largest = 0.0f64;
    let mut j_abs = 1i64;
    let last;
    loop {
        let mut sweep = 0.0f64;
        for j in [-j_abs, j_abs] {
            if j == 0 || j == n {
                continue;
            }
            let term = gamma_complex(-chi(j))? * gamma_complex(chi(j - n))?;
            bilinear += term;
            sweep = sweep.max(term.norm());
            largest = largest.max(term.norm());
        }
        if j_abs > n.abs() + 1 && sweep <= ctrl.tol * 1e-3 * largest.max(f64::MIN_POSITIVE) {
            last = sweep;
            break;
        }
        j_abs += 1;
        if j_abs as usize > ctrl.n_max {
            return Err(Error::NotConverged {
                terms: j_abs as usize,
                tail_bound: sweep,
            });
        }
    }
    let bilinear = -bilinear / (l2 * l2);
    Ok(ProdingerParts {
        gamma_prime,
        gamma,
        g_term,
        bilinear,
        tail_bound: gs.tail_bound * g_term.norm() + 2.0 * last / (l2 * l2),
    })
}

/// The coefficient itself; it vanishes for every `n ≠ 0`.
pub fn prodinger_coefficient(n: i64, ctrl: &SeriesControl) -> Result<Complex64> {
    Ok(prodinger_parts(n, ctrl)?.total())
}

/// Cumulants `κ_1..κ_n` from raw moments `μ_1..μ_n` via
/// `κ_m = μ_m − Σ_{k=1}^{m−1} C(m−1, k−1) κ_k μ_{m−k}`.
pub fn moments_to_cumulants(moments: &[f64]) -> Vec<f64> {
    let n = moments.len();
    let mu = |j: usize| if j == 0 { 1.0 } else { moments[j - 1] };
    let mut kappa: Vec<f64> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = mu(m);
        let mut binom = 1.0; // C(m−1, k−1)
        for k in 1..m {
            acc -= binom * kappa[k - 1] * mu(m - k);
            binom = binom * (m - k) as f64 / k as f64;
        }
        kappa.push(acc);
    }
    kappa
}

/// Inverse of [`moments_to_cumulants`].
pub fn cumulants_to_moments(cumulants: &[f64]) -> Vec<f64> {
    let n = cumulants.len();
    let mut mu: Vec<f64> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = cumulants[m - 1];
        let mut binom = 1.0;
        for k in 1..m {
            acc += binom * cumulants[k - 1] * mu[m - k - 1];
            binom = binom * (m - k) as f64 / k as f64;
        }
        mu.push(acc);
    }
    mu
}

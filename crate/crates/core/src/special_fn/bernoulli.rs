use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index served by [`bernoulli_number`].
pub const BERNOULLI_MAX: usize = 60;

fn table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        bernoulli_exact(BERNOULLI_MAX)
            .iter()
            .map(|b| b.to_f64().expect("Bernoulli numbers up to 60 fit in f64"))
            .collect()
    })
}

/// B_0..=B_m as exact rationals, from Σ_{k=0}^{m} C(m+1, k) B_k = 0 (B_1 = −1/2).
pub fn bernoulli_exact(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::from_integer(BigInt::from(1)));
    for n in 1..=m {
        let mut binom = BigInt::from(1); // C(n+1, 0)
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Bernoulli number B_m as f64 (B_1 = −1/2). Panics for m > [`BERNOULLI_MAX`].
pub fn bernoulli_number(m: usize) -> f64 {
    assert!(m <= BERNOULLI_MAX, "B_{m} is outside the tabulated range");
    table()[m]
}

/// Bernoulli polynomial B_k(x) = Σ_j C(k, j) B_j x^{k−j}.
pub fn bernoulli_polynomial(k: usize, x: f64) -> f64 {
    let mut binom = 1.0;
    let mut acc = 0.0;
    // Horner-free evaluation; k stays small (≤ 30) in every caller
    for j in 0..=k {
        acc += binom * bernoulli_number(j) * x.powi((k - j) as i32);
        binom = binom * (k - j) as f64 / (j + 1) as f64;
    }
    acc
}

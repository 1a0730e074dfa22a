//! Named continuous limit laws with analytic transforms.

mod aldous;
mod digital;
mod gumbel;
mod inverse_cdf;
mod patricia;
mod uniform;

use std::sync::Arc;

pub use aldous::Aldous;
pub use digital::{constants as digital_constants, psi_u_at_pole, ApproxCountingLimit, DigitalConstants, SuccessfulSearchLimit, POLE_GUARD};
pub use gumbel::ScaledGumbel;
pub use inverse_cdf::{InverseCdfTable, TABLE_POINTS};
pub use patricia::{g_zero, PatriciaLimit};
pub use uniform::{UniformN, UniformPlusTwoU};

use crate::model::CharacteristicModel;
use crate::special_fn::{zeta_int, EULER_GAMMA};
use crate::{Error, Result};

/// Decay exponent declared by models whose lattice values `φ^{(k)}(2πn)` fall
/// off exponentially in `|n|`; large enough to select absolute summation.
pub const EXPONENTIAL_DECAY: f64 = 16.0;

/// A catalog model together with the name it is addressed by.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub model: Arc<dyn CharacteristicModel>,
    pub description: &'static str,
    /// Named constants attached to the law, e.g. `Q`, `alpha_const`, `g0`.
    pub extras: Vec<(&'static str, f64)>,
}

impl CatalogEntry {
    fn new<M: CharacteristicModel + 'static>(name: String, model: M, description: &'static str) -> Self {
        Self {
            name,
            model: Arc::new(model),
            description,
            extras: Vec::new(),
        }
    }

    fn with_extras(mut self, extras: &[(&'static str, f64)]) -> Self {
        self.extras = extras.to_vec();
        self
    }

    /// Value of a named constant.
    pub fn extra(&self, name: &str) -> Option<f64> {
        self.extras.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn model(&self) -> &dyn CharacteristicModel {
        self.model.as_ref()
    }
}

/// Name patterns understood by [`by_name`].
pub const CATALOG_NAMES: [&str; 7] = [
    "gumbel:c",
    "aldous",
    "uniform:N",
    "uniform2u:N",
    "approx-counting",
    "successful-search",
    "patricia",
];

pub fn scaled_gumbel(c: f64) -> Result<CatalogEntry> {
    Ok(CatalogEntry::new(
        format!("gumbel:{c}"),
        ScaledGumbel::new(c)?,
        "c times a standard Gumbel variable; limit of maxima of geometric variables",
    )
    .with_extras(&[("c", c), ("euler_gamma", EULER_GAMMA)]))
}

pub fn aldous_assignment() -> CatalogEntry {
    CatalogEntry::new(
        "aldous".into(),
        Aldous,
        "density e^{-x}(e^{-x} - 1 + x)/(1 - e^{-x})^2 on x > 0 from the random assignment problem",
    )
    .with_extras(&[("zeta2", zeta_int(2)), ("zeta3", zeta_int(3))])
}

pub fn uniform_n(n: u32) -> Result<CatalogEntry> {
    Ok(CatalogEntry::new(format!("uniform:{n}"), UniformN::new(n)?, "uniform on (0, N)").with_extras(&[("N", n as f64)]))
}

pub fn uniform_n_plus_2u(n: u32) -> Result<CatalogEntry> {
    Ok(CatalogEntry::new(
        format!("uniform2u:{n}"),
        UniformPlusTwoU::new(n)?,
        "uniform on (0, N) plus two independent uniforms on (0, 1)",
    )
    .with_extras(&[("N", n as f64)]))
}

/// `Q = η(1)`, `η(1)` from the product, `α = Σ 1/(2^n − 1)` and γ.
fn digital_extras() -> [(&'static str, f64); 4] {
    let c = digital_constants();
    let eta1 = crate::special_fn::eta_product(num_complex::Complex64::new(1.0, 0.0), &crate::SeriesControl::with_tol(1e-16))
        .map_or(f64::NAN, |t| t.value.re);
    [("Q", c.q), ("eta1", eta1), ("alpha_const", c.alpha), ("euler_gamma", EULER_GAMMA)]
}

pub fn approx_counting_limit() -> CatalogEntry {
    CatalogEntry::new(
        "approx-counting".into(),
        ApproxCountingLimit::new(),
        "limit of U_n - log2 n for the approximate counting birth chain",
    )
    .with_extras(&digital_extras())
}

pub fn successful_search_limit() -> CatalogEntry {
    CatalogEntry::new(
        "successful-search".into(),
        SuccessfulSearchLimit::new(),
        "limit of S_n - log2 n for successful search in a digital search tree",
    )
    .with_extras(&digital_extras())
}

pub fn patricia_limit() -> CatalogEntry {
    CatalogEntry::new(
        "patricia".into(),
        PatriciaLimit::new(),
        "limit of Y_s - log2 s for the Poissonized Patricia trie depth",
    )
    .with_extras(&[("g0", g_zero()), ("euler_gamma", EULER_GAMMA)])
}

fn parse_param<T: std::str::FromStr>(name: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::UnknownName(format!("{name} (bad parameter `{value}`)")))
}

/// Resolves `gumbel:c`, `aldous`, `uniform:N`, `uniform2u:N`, `approx-counting`,
/// `successful-search` or `patricia`.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (name, None),
    };
    match (head, param) {
        ("gumbel", Some(c)) => scaled_gumbel(parse_param(name, c)?).map_err(|_| Error::UnknownName(name.into())),
        ("aldous", None) => Ok(aldous_assignment()),
        ("uniform", Some(n)) => uniform_n(parse_param(name, n)?).map_err(|_| Error::UnknownName(name.into())),
        ("uniform2u", Some(n)) => {
            uniform_n_plus_2u(parse_param(name, n)?).map_err(|_| Error::UnknownName(name.into()))
        }
        ("approx-counting", None) => Ok(approx_counting_limit()),
        ("successful-search", None) => Ok(successful_search_limit()),
        ("patricia", None) => Ok(patricia_limit()),
        _ => Err(Error::UnknownName(name.into())),
    }
}

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: Complex64 },

    #[error("{0} overflows the f64 range")]
    Overflow(&'static str),

    #[error("series did not converge within {terms} terms (tail bound {tail_bound:e})")]
    NotConverged { terms: usize, tail_bound: f64 },

    #[error("model `{model}` declares decay exponent {decay}; use Cesàro summation")]
    NeedsCesaro { model: String, decay: f64 },

    #[error("argument {0} lies outside the strip of the moment generating function")]
    StripViolation(Complex64),

    #[error("model `{0}` has no moment generating function")]
    NoMgf(String),

    #[error("model `{0}` has no distribution function")]
    NoCdf(String),

    #[error("model `{model}` supports derivatives up to order {max}, {requested} requested")]
    InsufficientOrder {
        model: String,
        requested: usize,
        max: usize,
    },

    #[error("quadrature window misses tail mass {0:e}")]
    WindowTooSmall(f64),

    #[error("simulation needs {requested} key insertions, budget is {budget}")]
    BudgetExceeded { requested: u64, budget: u64 },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

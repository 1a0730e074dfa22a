//! Integer-valued processes from digital trees and counting algorithms: exact
//! finite-n laws, trie simulation and convergence diagnostics.

mod convergence;
mod exact;
mod poisson;
mod trie;

pub use convergence::{
    by_name, by_name_seeded, convergence_check, monotone_cdf_check, monotone_cdf_check_with_slack, rounded_limit, MonotoneReport, ProcessSpec, HEIGHT_TRIALS,
    LIMIT_CLIP, PROCESS_NAMES,
};
pub use exact::{approx_counting, approx_counting_rows, max_geometric, successful_search, trie_depth, COUNTING_HEADROOM};
pub use poisson::{
    convolve_bernoulli, doubling_sum, patricia_cdf_identity, patricia_mean, patricia_poisson, BernoulliProfile,
};
pub use trie::{trie_simulate, trie_simulate_with_budget, TrieSample, DEFAULT_BUDGET};

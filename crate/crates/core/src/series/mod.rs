//! Direct evaluation of Gauss, Appell and Lauricella series.

pub mod eval;
pub mod gamma;
pub mod multi_index;
pub mod params;
pub mod term;
pub mod walker;

pub use eval::{
    eval_appell_f2, eval_binomial_product, eval_gauss_2f1, eval_lauricella, eval_power_of_sum, fd_at_unity,
    geometric_tail, in_convergence_domain, tail_bound, EvalOptions, EvalResult,
};
pub use gamma::{beta, gamma, ln_gamma, ln_gamma_sign, pochhammer};
pub use multi_index::MultiIndex;
pub use params::{Family, LauricellaParams};
pub use term::HyperTerm;

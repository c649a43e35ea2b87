pub mod integrals;
pub mod jacobi;

pub use integrals::{cross_check, eval_integral_rep, integral_rep, IntegralCheck, IntegralParams, IntegralRep, KernelVariant};
pub use jacobi::{gauss_jacobi_rule, JacobiRule};

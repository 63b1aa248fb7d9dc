//! Complex special-function kernel: logarithm and arctangent on the principal
//! branch, gamma and upper incomplete gamma, the Dirichlet lambda function,
//! and the compensated accumulators every series in the crate goes through.

mod elementary;
mod gamma;
mod incomplete_gamma;
mod lambda;
mod summation;

pub use elementary::{principal_arctan, principal_log, real_pow, sin_pi};
pub use gamma::complex_gamma;
pub use incomplete_gamma::upper_incomplete_gamma;
pub use lambda::{dirichlet_lambda, dirichlet_lambda_with, odd_power_tail};
pub use summation::{compensated_sum, CompensatedSum, ComplexSum};

pub(crate) use incomplete_gamma::lower_incomplete_gamma_series;

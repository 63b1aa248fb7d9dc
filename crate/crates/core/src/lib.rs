//! Dirichlet series arising from Euler–Ramanujan product identities.
//!
//! The crate evaluates the alternating, geometric and helicoid Dirichlet
//! series families with certified truncation bounds, checks the logarithmic
//! Euler–Ramanujan identities and their Dirichlet-series decompositions,
//! samples the associated minimal surfaces (the Scherk θ-family and the
//! helicoid) through their Weierstrass–Enneper parametrizations, and
//! validates the Abel-summation functional equation of the alternating
//! family against quadrature.

// `!(x < y)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod functional_equation;
pub mod identities;
pub mod precision;
pub mod quadrature;
pub mod serde_complex;
pub mod series;
pub mod special_functions;
pub mod surfaces;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use precision::{EvalResult, Precision};

/// Complex scalar used throughout the crate.
pub type ComplexValue = Complex64;

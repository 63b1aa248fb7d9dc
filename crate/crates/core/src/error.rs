use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the region where the quantity is defined or
    /// where the identity being checked is valid.
    #[error("domain error: {message}")]
    Domain { message: String, offending: String },

    /// Gamma was asked for a value at one of its poles.
    #[error("gamma has a pole at {0}")]
    Pole(i64),

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("{what} did not converge within {terms} terms")]
    Convergence { what: &'static str, terms: u64 },
}

impl Error {
    pub fn domain(message: impl Into<String>, offending: impl Into<String>) -> Self {
        Error::Domain {
            message: message.into(),
            offending: offending.into(),
        }
    }

    /// Stable short identifier, used as the `code` field of CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Pole(_) => "pole",
            Error::NonFinite(_) => "non_finite",
            Error::Convergence { .. } => "convergence",
        }
    }

    /// The input that triggered the error, rendered as text.
    pub fn offending_input(&self) -> String {
        match self {
            Error::Domain { offending, .. } => offending.clone(),
            Error::Pole(n) => n.to_string(),
            Error::NonFinite(what) => (*what).to_string(),
            Error::Convergence { terms, .. } => terms.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite_c(
    z: num_complex::Complex64,
    what: &'static str,
) -> Result<num_complex::Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

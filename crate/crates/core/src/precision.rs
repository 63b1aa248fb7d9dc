use crate::error::{Error, Result};

/// Truncation policy for series evaluation.
///
/// A series stops at the first `N` whose certified tail bound is at most
/// `max(abs_tol, rel_tol * |partial sum|)`, or at `max_terms`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: u64,
}

impl Precision {
    pub fn new(rel_tol: f64, abs_tol: f64, max_terms: u64) -> Result<Self> {
        let p = Precision {
            rel_tol,
            abs_tol,
            max_terms,
        };
        p.validate()?;
        Ok(p)
    }

    /// Absolute-tolerance policy; the relative part is pinned at unit roundoff.
    pub fn absolute(abs_tol: f64) -> Result<Self> {
        Self::new(f64::EPSILON / 2.0, abs_tol, Self::default().max_terms)
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Result<Self> {
        self.max_terms = max_terms;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.rel_tol.is_finite()
            && self.abs_tol.is_finite()
            && self.max_terms >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::domain(
                "precision needs rel_tol > 0, abs_tol > 0, max_terms >= 1",
                format!("{self:?}"),
            ))
        }
    }

    pub(crate) fn target(&self, partial_abs: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * partial_abs)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            rel_tol: f64::EPSILON / 2.0,
            abs_tol: 1e-300,
            max_terms: 10_000_000,
        }
    }
}

/// A series value together with the number of terms summed and a certified
/// bound on the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: num_complex::Complex64,
    pub terms_used: u64,
    pub tail_bound: f64,
}

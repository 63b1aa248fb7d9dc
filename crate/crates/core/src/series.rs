//! The three Dirichlet-series families with geometric coefficients:
//!
//! - `ALT`:  `Σ_{n≥1} (−1)^{n−1} aⁿ / n^s`, `0 ≤ a < 1`
//! - `GEO`:  `Σ_{n≥1} bⁿ / n^s`, `|b| < 1`
//! - `HELI`: `Σ_{k≥1} i^{k+1} tᵏ / k^s`, `|t| < 1`
//!
//! All three converge absolutely for every complex `s`. Terms are summed in
//! ascending order with compensated accumulation and the returned tail bound
//! dominates the neglected terms by a geometric series.

use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::precision::{EvalResult, Precision};
use crate::special_functions::{principal_log, ComplexSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Alt,
    Geo,
    Heli,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Alt => "alt",
            Family::Geo => "geo",
            Family::Heli => "heli",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alt" => Ok(Family::Alt),
            "geo" => Ok(Family::Geo),
            "heli" => Ok(Family::Heli),
            other => Err(Error::domain("unknown series family", other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    pub family: Family,
    pub s: Complex64,
    pub param: f64,
}

impl SeriesSpec {
    pub fn validate(&self) -> Result<()> {
        check_s(self.s)?;
        check_param(self.family, self.param)
    }

    pub fn eval(&self, p: &Precision) -> Result<EvalResult> {
        match self.family {
            Family::Alt => eval_alt(self.s, self.param, p),
            Family::Geo => eval_geo(self.s, self.param, p),
            Family::Heli => eval_heli(self.s, self.param, p),
        }
    }
}

fn check_s(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite("series exponent"))
    }
}

fn check_param(family: Family, param: f64) -> Result<()> {
    let ok = match family {
        Family::Alt => (0.0..1.0).contains(&param),
        Family::Geo | Family::Heli => param.abs() < 1.0,
    };
    if ok {
        Ok(())
    } else {
        let msg = match family {
            Family::Alt => "ALT series needs 0 <= a < 1",
            Family::Geo => "GEO series needs |b| < 1",
            Family::Heli => "HELI series needs |t| < 1",
        };
        Err(Error::domain(msg, param.to_string()))
    }
}

/// `L(s, a) = Σ (−1)^{n−1} aⁿ / n^s`.
pub fn eval_alt(s: Complex64, a: f64, p: &Precision) -> Result<EvalResult> {
    check_s(s)?;
    check_param(Family::Alt, a)?;
    geometric_dirichlet_sum(s, a, p, |n| if n % 2 == 1 { 1.0 } else { -1.0 }.into())
}

/// `M(s, b) = Σ bⁿ / n^s`.
pub fn eval_geo(s: Complex64, b: f64, p: &Precision) -> Result<EvalResult> {
    check_s(s)?;
    check_param(Family::Geo, b)?;
    let negative = b < 0.0;
    geometric_dirichlet_sum(s, b.abs(), p, move |n| {
        if negative && n % 2 == 1 { -1.0 } else { 1.0 }.into()
    })
}

/// `H(s, t) = Σ i^{k+1} tᵏ / k^s`.
pub fn eval_heli(s: Complex64, t: f64, p: &Precision) -> Result<EvalResult> {
    check_s(s)?;
    check_param(Family::Heli, t)?;
    let negative = t < 0.0;
    geometric_dirichlet_sum(s, t.abs(), p, move |k| {
        let sign = if negative && k % 2 == 1 { -1.0 } else { 1.0 };
        // i^{k+1}
        let unit = match (k + 1) % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        unit * sign
    })
}

/// Magnitude `rⁿ n^{−σ}` of the n-th term.
#[derive(Debug, Clone, Copy)]
enum Magnitude {
    /// `s = 1`: running power divided by n.
    Harmonic {
        power: f64,
    },
    LogDomain {
        ln_r: f64,
        sigma: f64,
    },
}

impl Magnitude {
    fn new(s: Complex64, r: f64) -> Self {
        if s == Complex64::new(1.0, 0.0) {
            Magnitude::Harmonic { power: 1.0 }
        } else {
            Magnitude::LogDomain {
                ln_r: r.ln(),
                sigma: s.re,
            }
        }
    }

    /// Magnitude of term `n`; must be called with n = 1, 2, 3, … in order.
    fn next(&mut self, n: u64, r: f64) -> f64 {
        match self {
            Magnitude::Harmonic { power } => {
                *power *= r;
                *power / n as f64
            }
            Magnitude::LogDomain { ln_r, sigma } => {
                let nf = n as f64;
                (nf * *ln_r - *sigma * nf.ln()).exp()
            }
        }
    }
}

/// Ratio bound `q ≥ |term_{m+1}/term_m|` valid for every `m > n`.
fn ratio_bound(r: f64, sigma: f64, n: u64) -> f64 {
    if sigma >= 0.0 {
        r
    } else {
        let nf = n as f64;
        r * ((nf + 2.0) / (nf + 1.0)).powf(-sigma)
    }
}

/// `Σ_{n≥1} phase(n) rⁿ n^{−s}` with `0 ≤ r < 1` and `|phase(n)| = 1`.
///
/// After `N` terms the neglected tail is at most `m_{N+1} / (1 − q)` where
/// `m_{N+1} = r^{N+1} (N+1)^{−Re s}` and `q` bounds every later term ratio:
/// `q = r` when `Re s ≥ 0`, `q = r ((N+2)/(N+1))^{−Re s}` otherwise.
fn geometric_dirichlet_sum<P>(s: Complex64, r: f64, p: &Precision, phase: P) -> Result<EvalResult>
where
    P: Fn(u64) -> Complex64,
{
    p.validate()?;
    if r == 0.0 {
        return Ok(EvalResult {
            value: Complex64::new(0.0, 0.0),
            terms_used: 1,
            tail_bound: 0.0,
        });
    }
    let mut magnitude = Magnitude::new(s, r);
    let mut acc = ComplexSum::new();
    let mut current = magnitude.next(1, r);
    let mut n: u64 = 1;
    loop {
        if !current.is_finite() {
            return Err(Error::NonFinite("series term"));
        }
        let rotation = if s.im == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, -s.im * (n as f64).ln())
        };
        acc.add(phase(n) * rotation * current);

        let following = magnitude.next(n + 1, r);
        let q = ratio_bound(r, s.re, n);
        if q < 1.0 && following.is_finite() {
            let tail = following / (1.0 - q);
            let partial = acc.value();
            if tail <= p.target(partial.norm()) || n >= p.max_terms {
                return Ok(EvalResult {
                    value: partial,
                    terms_used: n,
                    tail_bound: tail,
                });
            }
        } else if n >= p.max_terms {
            return Err(Error::Convergence {
                what: "Dirichlet series tail bound",
                terms: n,
            });
        }
        current = following;
        n += 1;
    }
}

/// Exact value of each family at `s = 1`, used as an independent oracle:
/// `ALT → ln(1+a)`, `GEO → −ln(1−b)`, `HELI → −i·log(1 − i t)`.
pub fn closed_form_s1(family: Family, param: f64) -> Result<Complex64> {
    check_param(family, param)?;
    Ok(match family {
        Family::Alt => Complex64::new(param.ln_1p(), 0.0),
        Family::Geo => Complex64::new(-(-param).ln_1p(), 0.0),
        Family::Heli => {
            let w = principal_log(Complex64::new(1.0, -param))?;
            Complex64::new(0.0, -1.0) * w
        }
    })
}

/// Result of [`probe_sigma_limit`]: the series value at real `s = σ` and the
/// bound `a² 2^{−σ} / (1 − a)` on its distance from `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaLimitProbe {
    pub result: EvalResult,
    pub bound: f64,
    pub deviation: f64,
}

impl SigmaLimitProbe {
    pub fn within_bound(&self) -> bool {
        self.deviation <= self.bound
    }
}

/// Behaviour of `L(σ, a)` as `σ → ∞`: every term past the first is crushed,
/// so the value approaches `a`.
pub fn probe_sigma_limit(a: f64, sigma: f64) -> Result<SigmaLimitProbe> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain("sigma probe needs 0 < a < 1", a.to_string()));
    }
    if !(sigma >= 1.0 && sigma.is_finite()) {
        return Err(Error::domain(
            "sigma probe needs sigma >= 1",
            sigma.to_string(),
        ));
    }
    let result = eval_alt(Complex64::new(sigma, 0.0), a, &Precision::default())?;
    let bound = a * a * (-sigma).exp2() / (1.0 - a);
    Ok(SigmaLimitProbe {
        result,
        bound,
        deviation: (result.value - a).norm(),
    })
}

/// Samples `L(σ + it, a)` along vertical lines, one value per `t`.
pub fn probe_oscillation(a: f64, sigma: f64, t_values: &[f64]) -> Result<Vec<Complex64>> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::domain(
            "oscillation probe needs 0 < a < 1",
            a.to_string(),
        ));
    }
    let p = Precision::default();
    t_values
        .iter()
        .map(|&t| eval_alt(Complex64::new(sigma, t), a, &p).map(|r| r.value))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn alt_examples() {
        let r = eval_alt(c(1.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - 1.5f64.ln()).abs() < 1e-16);
        assert_eq!(r.value.im, 0.0);
        let r = eval_alt(c(2.0, 3.0), 0.0, &p()).unwrap();
        assert_eq!(r.value, c(0.0, 0.0));
        assert_eq!(r.tail_bound, 0.0);
        // a/(1+a)² by differentiating the geometric series
        let r = eval_alt(c(-1.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - 2.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn alt_cross_check_by_long_summation() {
        let direct: f64 = (1..=10_000)
            .map(|n| {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                sign * 0.5f64.powi(n) * n as f64
            })
            .sum();
        let r = eval_alt(c(-1.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - direct).abs() < 1e-15);
    }

    #[test]
    fn geo_examples() {
        let r = eval_geo(c(1.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - 2f64.ln()).abs() < 1e-16);
        assert_eq!(eval_geo(c(1.5, 0.0), 0.0, &p()).unwrap().value, c(0.0, 0.0));
        // Li₂(1/2) = π²/12 − ln²2/2
        let li2 = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
        let r = eval_geo(c(2.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - li2).abs() < 1e-15);
        assert!((li2 - 0.582_240_5).abs() < 1e-7);
    }

    #[test]
    fn heli_examples() {
        let r = eval_heli(c(1.0, 0.0), 0.5, &p()).unwrap();
        assert!((r.value.re - (-0.5f64.atan())).abs() < 1e-16);
        assert!((r.value.im - (-(1.25f64.sqrt().ln()))).abs() < 1e-16);
        assert_eq!(
            eval_heli(c(0.3, 0.0), 0.0, &p()).unwrap().value,
            c(0.0, 0.0)
        );
        let r = eval_heli(c(1.0, 0.0), -0.5, &p()).unwrap();
        assert!((r.value.re - 0.5f64.atan()).abs() < 1e-16);
        assert!((r.value.im - (-(1.25f64.sqrt().ln()))).abs() < 1e-16);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            eval_alt(c(1.0, 0.0), 1.0, &p()),
            Err(Error::Domain { .. })
        ));
        assert!(eval_alt(c(1.0, 0.0), -0.1, &p()).is_err());
        assert!(eval_geo(c(1.0, 0.0), 1.0, &p()).is_err());
        assert!(eval_geo(c(1.0, 0.0), -1.0, &p()).is_err());
        assert!(eval_geo(c(1.0, 0.0), -0.5, &p()).is_ok());
        assert!(eval_heli(c(1.0, 0.0), 1.0, &p()).is_err());
        assert!(closed_form_s1(Family::Alt, 1.0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert!(
            (closed_form_s1(Family::Alt, 0.5).unwrap().re - 0.405_465_108_108_164_4).abs() < 1e-16
        );
        assert_eq!(closed_form_s1(Family::Geo, 0.0).unwrap(), c(0.0, 0.0));
        let h = closed_form_s1(Family::Heli, 0.5).unwrap();
        assert!((h - c(-0.463_647_609_000_806_1, -0.111_571_775_657_104_9)).norm() < 1e-15);
    }

    #[test]
    fn sigma_limit_examples() {
        let pr = probe_sigma_limit(0.9, 30.0).unwrap();
        assert!(pr.deviation <= 7.6e-9 && pr.within_bound());
        let pr = probe_sigma_limit(0.5, 1.0).unwrap();
        assert!((pr.result.value.re - 1.5f64.ln()).abs() < 1e-16);
        let pr = probe_sigma_limit(0.5, 60.0).unwrap();
        // The true distance is a²/2⁶⁰ ≈ 2.2e-19, below half an ulp of 0.5.
        assert_eq!(pr.result.value.re, 0.5);
        assert!(pr.bound < 4.4e-19);
        assert!(probe_sigma_limit(1.0, 30.0).is_err());
    }

    #[test]
    fn oscillation_examples() {
        let v = probe_oscillation(0.5, 0.5, &[0.0]).unwrap();
        assert_eq!(v[0], eval_alt(c(0.5, 0.0), 0.5, &p()).unwrap().value);
        let v = probe_oscillation(0.9, 0.5, &[10.0, 100.0, 1000.0]).unwrap();
        assert_eq!(v.len(), 3);
        for z in v {
            assert!(z.norm() <= 9.0);
        }
        assert!(probe_oscillation(0.5, 0.5, &[]).unwrap().is_empty());
    }

    #[test]
    fn negative_sigma_bound_covers_growing_terms() {
        // With Re(s) = −3 the terms grow for a while; the reported bound must
        // still dominate the true tail.
        let s = c(-3.0, 0.0);
        let short = eval_alt(s, 0.9, &Precision::new(1e-16, 1e-300, 60).unwrap()).unwrap();
        let long = eval_alt(s, 0.9, &Precision::default()).unwrap();
        assert_eq!(short.terms_used, 60);
        assert!((short.value - long.value).norm() <= short.tail_bound);
    }

    #[test]
    fn result_stable_once_converged() {
        let s = c(0.7, -2.0);
        let a = eval_alt(s, 0.8, &Precision::new(1e-16, 1e-14, 1_000).unwrap()).unwrap();
        let b = eval_alt(s, 0.8, &Precision::new(1e-16, 1e-14, 1_000_000).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

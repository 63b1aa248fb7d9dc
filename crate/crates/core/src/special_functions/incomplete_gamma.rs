use num_complex::Complex64;

use super::elementary::real_pow;
use super::gamma::{complex_gamma, nonpositive_integer};
use super::summation::{CompensatedSum, ComplexSum};
use crate::error::{ensure_finite_c, Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 100_000;

/// Upper incomplete gamma `Γ(s, x) = ∫ₓ^∞ t^{s−1} e^{−t} dt` for complex `s`
/// and real `x > 0`.
///
/// Regimes:
/// - `x < 1`: `Γ(s) − γ(s, x)` with the lower function from its power
///   series; exact non-positive integers go through `E₁(x)` and the
///   downward recurrence instead, since `Γ(s)` has a pole there.
/// - `x < Re(s) + 1`: same series split.
/// - otherwise: Legendre continued fraction (modified Lentz).
pub fn upper_incomplete_gamma(s: Complex64, x: f64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite() && x.is_finite()) {
        return Err(Error::NonFinite("upper_incomplete_gamma input"));
    }
    if x <= 0.0 {
        return Err(Error::domain(
            "upper incomplete gamma needs x > 0",
            x.to_string(),
        ));
    }
    let value = if x < 1.0 {
        match nonpositive_integer(s) {
            Some(n) => integer_order_small_x(n, x),
            None => complex_gamma(s)? - lower_incomplete_gamma_series(s, x)?,
        }
    } else if x < s.re + 1.0 {
        complex_gamma(s)? - lower_incomplete_gamma_series(s, x)?
    } else {
        continued_fraction(s, x)?
    };
    ensure_finite_c(value, "upper_incomplete_gamma")
}

/// `γ(s, x) = x^s e^{−x} Σₙ xⁿ / (s(s+1)…(s+n))`, the analytic continuation
/// of the lower incomplete gamma. Internal: used for the series regime and
/// for consistency tests.
pub(crate) fn lower_incomplete_gamma_series(s: Complex64, x: f64) -> Result<Complex64> {
    if let Some(n) = nonpositive_integer(s) {
        return Err(Error::Pole(n));
    }
    let mut term = Complex64::new(1.0, 0.0) / s;
    let mut acc = ComplexSum::new();
    acc.add(term);
    for n in 1..MAX_ITER {
        term = term * x / (s + n as f64);
        acc.add(term);
        let total = acc.value();
        if term.norm() <= f64::EPSILON * 0.25 * total.norm() && (n as f64) > x {
            return Ok(real_pow(x, s) * (-x).exp() * total);
        }
    }
    Err(Error::Convergence {
        what: "lower incomplete gamma series",
        terms: MAX_ITER as u64,
    })
}

/// Exponential integral `E₁(x)` by its convergent power series (small x).
fn exp_integral_e1_series(x: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    acc.add(-EULER_GAMMA);
    acc.add(-x.ln());
    // Σ_{n≥1} (−1)^{n+1} xⁿ / (n · n!)
    let mut power_over_factorial = 1.0;
    for n in 1..200 {
        power_over_factorial *= x / n as f64;
        let term = power_over_factorial / n as f64;
        acc.add(if n % 2 == 1 { term } else { -term });
        if term < 1e-18 * acc.value().abs() {
            break;
        }
    }
    acc.value()
}

/// `Γ(n, x)` for integer `n <= 0` and `0 < x < 1`, from
/// `Γ(s, x) = (Γ(s+1, x) − x^s e^{−x}) / s` starting at `Γ(0, x) = E₁(x)`.
fn integer_order_small_x(n: i64, x: f64) -> Complex64 {
    let mut value = exp_integral_e1_series(x);
    let e = (-x).exp();
    for j in 1..=(-n) {
        let s = -(j as f64);
        value = (value - x.powf(s) * e) / s;
    }
    Complex64::new(value, 0.0)
}

fn continued_fraction(s: Complex64, x: f64) -> Result<Complex64> {
    const TINY: f64 = 1e-300;
    let tiny = Complex64::new(TINY, 0.0);
    let mut b = Complex64::new(x + 1.0, 0.0) - s;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let i = i as f64;
        let an = -i * (Complex64::new(i, 0.0) - s);
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < TINY {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).norm() <= f64::EPSILON {
            return Ok(real_pow(x, s) * (-x).exp() * h);
        }
    }
    Err(Error::Convergence {
        what: "incomplete gamma continued fraction",
        terms: MAX_ITER as u64,
    })
}

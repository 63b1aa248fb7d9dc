use num_complex::Complex64;
use std::f64::consts::PI;

use super::elementary::sin_pi;
use crate::error::{ensure_finite_c, Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// If `s` is a non-positive integer, returns it.
pub(crate) fn nonpositive_integer(s: Complex64) -> Option<i64> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        Some(s.re as i64)
    } else {
        None
    }
}

fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// `sin(πz)` with the real part reduced before scaling by π.
fn sin_pi_complex(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    Complex64::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// Lanczos sum for `Re(z) >= 0.5`, returned as `(log of the power part, series)`.
fn lanczos_parts(z: Complex64) -> (Complex64, Complex64) {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let log_power = (z + 0.5) * t.ln() - t + 0.5 * (2.0 * PI).ln();
    (log_power, series)
}

/// Complete gamma function of a complex argument.
///
/// Lanczos approximation (g = 7, 9 terms) for `Re(s) >= 0.5`, reflection
/// formula below that. Non-positive integers are reported as poles.
pub fn complex_gamma(s: Complex64) -> Result<Complex64> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::NonFinite("complex_gamma input"));
    }
    if let Some(n) = nonpositive_integer(s) {
        return Err(Error::Pole(n));
    }
    let value = if s.re < 0.5 {
        let (log_power, series) = lanczos_parts(1.0 - s);
        let sin = sin_pi_complex(s);
        // π / (sin(πs) Γ(1−s)), with Γ(1−s) kept in log form until the end.
        Complex64::new(PI, 0.0) / (sin * series) * (-log_power).exp()
    } else {
        let (log_power, series) = lanczos_parts(s);
        log_power.exp() * series
    };
    let value = if s.im == 0.0 {
        Complex64::new(value.re, 0.0)
    } else {
        value
    };
    ensure_finite_c(value, "complex_gamma")
}

use num_complex::Complex64;

use super::summation::ComplexSum;
use crate::error::{ensure_finite_c, Error, Result};
use crate::precision::{EvalResult, Precision};

/// B₂, B₄, …, B₂₀.
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Euler–Maclaurin evaluation of `Σ_{k≥first} (2k+1)^{−s}` from a direct
/// prefix `first..cut` plus the tail `k ≥ cut`, where
/// `f(k) = (2k+1)^{−s}`, `f^{(m)}(k) = (−s)(−s−1)…(−s−m+1) 2^m (2k+1)^{−s−m}`.
///
/// Returns the value and the remainder bound
/// `|B_{2p}|/(2p)! ∫_cut^∞ |f^{(2p)}|`.
fn euler_maclaurin(s: Complex64, first: u64, cut: u64) -> (Complex64, f64) {
    let mut acc = ComplexSum::new();
    for k in first..cut {
        acc.add(odd_power(s, k));
    }
    let base = 2.0 * cut as f64 + 1.0;
    let ln_base = base.ln();
    let pow = |e: Complex64| (e * ln_base).exp();

    // ∫_cut^∞ (2x+1)^{−s} dx + f(cut)/2
    acc.add(pow(1.0 - s) / (2.0 * (s - 1.0)));
    acc.add(0.5 * pow(-s));

    // falling = (−s)(−s−1)…(−s−m+1)
    let mut falling = Complex64::new(1.0, 0.0);
    let mut two_pow = 1.0;
    let mut m = 0usize;
    for (j, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let order = 2 * j + 1;
        while m < order {
            falling *= -s - m as f64;
            two_pow *= 2.0;
            m += 1;
        }
        let derivative = falling * two_pow * pow(-s - order as f64);
        acc.add(-(b / factorial(2 * j + 2)) * derivative);
    }

    // Remainder with p = 10: needs the 20th derivative.
    let p2 = 2 * BERNOULLI_EVEN.len();
    while m < p2 {
        falling *= -s - m as f64;
        two_pow *= 2.0;
        m += 1;
    }
    let sigma = s.re + p2 as f64;
    let integral = falling.norm() * two_pow * base.powf(1.0 - sigma) / (2.0 * (sigma - 1.0));
    let b_last = BERNOULLI_EVEN[BERNOULLI_EVEN.len() - 1].abs();
    let remainder = b_last / factorial(p2) * integral;
    (acc.value(), remainder)
}

#[inline]
fn odd_power(s: Complex64, k: u64) -> Complex64 {
    let ln_base = (2.0 * k as f64 + 1.0).ln();
    (-s * ln_base).exp()
}

/// `Σ_{k≥first} (2k+1)^{−s}` for `Re(s) > 1`, with a certified bound.
pub fn odd_power_tail(s: Complex64, first: u64, p: &Precision) -> Result<EvalResult> {
    p.validate()?;
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::NonFinite("odd_power_tail input"));
    }
    if s.re <= 1.0 {
        return Err(Error::domain(
            "direct odd-integer power sum needs Re(s) > 1",
            format!("{}{:+}i", s.re, s.im),
        ));
    }
    // The Euler–Maclaurin cut has to sit well past |s| for the
    // asymptotic corrections to shrink.
    let mut cut = first + 8 + (s.norm() / 2.0).ceil() as u64;
    loop {
        let (value, bound) = euler_maclaurin(s, first, cut);
        let value = ensure_finite_c(value, "odd_power_tail")?;
        let done = bound <= p.target(value.norm());
        let over_budget = cut - first >= p.max_terms;
        if done || over_budget {
            return Ok(EvalResult {
                value,
                terms_used: (cut - first).max(1),
                tail_bound: bound,
            });
        }
        cut = first + 2 * (cut - first);
    }
}

/// Dirichlet lambda `λ(s) = Σ_{k≥0} (2k+1)^{−s}` for `Re(s) > 1`.
pub fn dirichlet_lambda(s: Complex64) -> Result<EvalResult> {
    odd_power_tail(s, 0, &Precision::default())
}

pub fn dirichlet_lambda_with(s: Complex64, p: &Precision) -> Result<EvalResult> {
    odd_power_tail(s, 0, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn closed_forms() {
        let l2 = dirichlet_lambda(real(2.0)).unwrap();
        assert!((l2.value.re - PI * PI / 8.0).abs() < 1e-15);
        assert!(l2.tail_bound < 1e-15);
        let l4 = dirichlet_lambda(real(4.0)).unwrap();
        assert!((l4.value.re - PI.powi(4) / 96.0).abs() < 1e-15);
        // 7ζ(3)/8
        let l3 = dirichlet_lambda(real(3.0)).unwrap();
        assert!((l3.value.re - 7.0 / 8.0 * 1.202_056_903_159_594_3).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_convergent_region() {
        assert!(matches!(
            dirichlet_lambda(real(1.0)),
            Err(Error::Domain { .. })
        ));
        assert!(dirichlet_lambda(Complex64::new(0.5, 3.0)).is_err());
    }

    #[test]
    fn tail_from_offset_matches_difference() {
        let s = Complex64::new(2.5, 1.0);
        let full = dirichlet_lambda(s).unwrap().value;
        let tail = odd_power_tail(s, 5, &Precision::default()).unwrap().value;
        let head: Complex64 = (0..5).map(|k| odd_power(s, k)).sum();
        assert!((full - head - tail).norm() < 1e-15);
    }

    #[test]
    fn large_imaginary_part_still_converges() {
        let s = Complex64::new(1.5, 60.0);
        let r = dirichlet_lambda(s).unwrap();
        // (1 − 2^{−s}) ζ(s) from mpmath.
        let expected = Complex64::new(0.784_399_159_665_561_2, -0.026_485_450_992_759_652);
        assert!((r.value - expected).norm() < 1e-13);
        assert!(r.tail_bound < 1e-14);
    }
}

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{ensure_finite_c, Error, Result};

/// Principal logarithm with imaginary part in (−π, π].
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("principal_log input"));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("logarithm of zero", "0"));
    }
    let mut w = Complex64::new(z.norm().ln(), z.im.atan2(z.re));
    // atan2(-0.0, x<0) gives -π; the principal branch closes on +π.
    if w.im == -PI {
        w.im = PI;
    }
    ensure_finite_c(w, "principal_log")
}

/// Inverse tangent through `(i/2)(log(1 − iz) − log(1 + iz))`.
pub fn principal_arctan(z: Complex64) -> Result<Complex64> {
    let iz = Complex64::i() * z;
    let one = Complex64::new(1.0, 0.0);
    if one - iz == Complex64::new(0.0, 0.0) || one + iz == Complex64::new(0.0, 0.0) {
        return Err(Error::domain(
            "arctan is singular at ±i",
            format!("{}{:+}i", z.re, z.im),
        ));
    }
    let diff = principal_log(one - iz)? - principal_log(one + iz)?;
    ensure_finite_c(Complex64::i() * diff * 0.5, "principal_arctan")
}

/// `base^s` for a positive real base, as `exp(s ln base)`.
pub fn real_pow(base: f64, s: Complex64) -> Complex64 {
    debug_assert!(base > 0.0);
    let l = base.ln();
    Complex64::from_polar((s.re * l).exp(), s.im * l)
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == r.trunc() {
        return 0.0;
    }
    (PI * r).sin()
}

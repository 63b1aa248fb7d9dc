//! Left-hand side versus right-hand side checks of the logarithmic
//! Euler–Ramanujan identities and their Dirichlet-series decompositions.
//!
//! Every check returns an [`IdentityReport`] whose `tail_bound` certifies the
//! truncation of the infinite sum or product (plus the truncation of any
//! inner series), so `pass` means the observed residual is explained by
//! truncation up to `tolerance`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::precision::Precision;
use crate::series::{closed_form_s1, eval_alt, eval_geo, eval_heli, Family};
use crate::special_functions::{CompensatedSum, ComplexSum};

/// Minimum distance kept from excluded points (odd multiples of π/2, zeros
/// of sin θ, branch points).
pub const SINGULAR_GUARD: f64 = 1e-8;

/// Upper bound on |x| in the alternating-series decomposition.
pub const PROP1_X_BOUND: f64 = PI / (2.0 * std::f64::consts::SQRT_2);

/// Upper bound on |y| in the alternating-series decomposition.
pub fn prop1_y_bound() -> f64 {
    FRAC_PI_2.sqrt()
}

pub const NOTE_ENTRY11: &str =
    "entry 11 evaluated with second term arctan(X/(k*pi - A)); the printed form repeats k*pi + A";
pub const NOTE_HELICOID_SIGN: &str =
    "helicoid bracket uses the -1/2 prefactor from the series derivation; +1/2 yields -arctan";

/// The half-integer multiples of π attached to index `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfIntegerGrid {
    pub k: u64,
}

impl HalfIntegerGrid {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("grid index starts at k = 1", "0"));
        }
        Ok(HalfIntegerGrid { k })
    }

    /// `(k − ½)π`
    #[inline]
    pub fn c(&self) -> f64 {
        (self.k as f64 - 0.5) * PI
    }

    /// `(k + ½)π`
    #[inline]
    pub fn d(&self) -> f64 {
        (self.k as f64 + 0.5) * PI
    }

    /// `π / (2 c_k)`
    #[inline]
    pub fn e(&self) -> f64 {
        PI / (2.0 * self.c())
    }

    /// `π / (2 d_k)`
    #[inline]
    pub fn f(&self) -> f64 {
        PI / (2.0 * self.d())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub check_name: String,
    pub inputs: BTreeMap<String, f64>,
    #[serde(with = "crate::serde_complex")]
    pub lhs: Complex64,
    #[serde(with = "crate::serde_complex")]
    pub rhs: Complex64,
    pub abs_residual: f64,
    pub tail_bound: f64,
    pub terms_used: u64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl IdentityReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        check_name: &str,
        inputs: &[(&str, f64)],
        lhs: Complex64,
        rhs: Complex64,
        tail_bound: f64,
        terms_used: u64,
        tolerance: f64,
        notes: Vec<String>,
    ) -> Result<Self> {
        let abs_residual = (lhs - rhs).norm();
        for v in [lhs.re, lhs.im, rhs.re, rhs.im, abs_residual, tail_bound] {
            if !v.is_finite() {
                return Err(Error::NonFinite("identity report"));
            }
        }
        Ok(IdentityReport {
            check_name: check_name.to_string(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lhs,
            rhs,
            abs_residual,
            tail_bound,
            terms_used,
            tolerance,
            pass: abs_residual <= tail_bound + tolerance,
            notes,
        })
    }

    /// Recomputes the pass criterion from the stored numbers.
    pub fn verdict(&self) -> bool {
        self.abs_residual <= self.tail_bound + self.tolerance
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("tolerance must be positive", tol.to_string()))
    }
}

fn check_terms(k: u64) -> Result<()> {
    if k >= 1 {
        Ok(())
    } else {
        Err(Error::domain("need at least one term", "0"))
    }
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            format!("{name} must be finite"),
            v.to_string(),
        ))
    }
}

/// Distance from `x` to the nearest odd multiple of π/2, and that multiple.
fn distance_to_odd_half_pi(x: f64) -> (f64, f64) {
    let m = ((x - FRAC_PI_2) / PI).round();
    let nearest = FRAC_PI_2 + m * PI;
    ((x - nearest).abs(), nearest)
}

/// Distance from `x` to the nearest multiple of π, and that multiple.
fn distance_to_pi_multiple(x: f64) -> (f64, f64) {
    let nearest = (x / PI).round() * PI;
    ((x - nearest).abs(), nearest)
}

/// `cos θ / sin θ` with cosines below unit roundoff treated as exact zeros,
/// so the binary64 neighbours of odd multiples of π/2 give `cot θ = 0`.
fn cot_snapped(theta: f64) -> f64 {
    let c = theta.cos();
    if c.abs() <= f64::EPSILON {
        0.0
    } else {
        c / theta.sin()
    }
}

/// `cos(X + A) / cos A` against the partial product
/// `Π_{k≤K} (1 − X/(c_k − A))(1 + X/(c_k + A))`.
pub fn er_product_check(x: f64, a: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_finite("X", x)?;
    check_finite("A", a)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    let (dist, nearest) = distance_to_odd_half_pi(a);
    if dist < SINGULAR_GUARD {
        return Err(Error::domain(
            format!("A is within {SINGULAR_GUARD:e} of the odd multiple {nearest} of pi/2"),
            a.to_string(),
        ));
    }
    // Factor k equals 1 − u_k with u_k = (2AX + X²)/(c_k² − A²).
    let numerator = (2.0 * a * x + x * x).abs();
    let first_omitted = HalfIntegerGrid { k: k_max + 1 };
    let head_room = (k_max as f64 - 0.5) * PI - a.abs();
    let u_next = numerator / (first_omitted.c().powi(2) - a * a);
    if head_room <= 0.0 || !(u_next <= 0.5) {
        return Err(Error::domain(
            "K too small: omitted product factors are not yet close to 1",
            k_max.to_string(),
        ));
    }

    let mut log_abs = CompensatedSum::new();
    let mut negative = false;
    let mut zero = false;
    for k in 1..=k_max {
        let c = HalfIntegerGrid { k }.c();
        for factor_minus_one in [-x / (c - a), x / (c + a)] {
            let factor = 1.0 + factor_minus_one;
            if factor == 0.0 {
                zero = true;
            } else {
                if factor < 0.0 {
                    negative = !negative;
                }
                log_abs.add(if factor > 0.0 {
                    factor_minus_one.ln_1p()
                } else {
                    factor.abs().ln()
                });
            }
        }
    }
    let product = if zero {
        0.0
    } else {
        let magnitude = log_abs.value().exp();
        if negative {
            -magnitude
        } else {
            magnitude
        }
    };
    let lhs = (x + a).cos() / a.cos();
    // Σ_{k>K} |u_k| ≤ |2AX + X²| / (π((K − ½)π − |A|)); |ln(1 − u)| ≤ 2|u| for |u| ≤ ½.
    let log_tail = 2.0 * numerator / (PI * head_room);
    let tail_bound = product.abs() * log_tail.exp_m1();
    IdentityReport::new(
        "product",
        &[("X", x), ("A", a), ("K", k_max as f64)],
        lhs.into(),
        product.into(),
        tail_bound,
        k_max,
        tol,
        vec![],
    )
}

fn check_cosine_window(name: &str, v: f64) -> Result<()> {
    check_finite(name, v)?;
    if v.abs() < FRAC_PI_2 - SINGULAR_GUARD {
        Ok(())
    } else {
        Err(Error::domain(
            format!("{name} must satisfy |{name}| < pi/2 so that cos {name} > 0"),
            v.to_string(),
        ))
    }
}

/// Outer tail of `Σ_k ln((c_k² − y²)/(c_k² − x²))` beyond `K`:
/// each term is at most `|x² − y²|/c_k² · 1/(1 − max(x²,y²)/c_k²)` and the
/// second factor is ≤ 2 past `k = 1` whenever `|x|, |y| < π/2`.
fn log_identity_tail(x: f64, y: f64, k_max: u64) -> f64 {
    2.0 * (x * x - y * y).abs() / (PI * PI * (k_max as f64 - 0.5))
}

/// `ln(cos y / cos x)` against `Σ_{k≤K} ln((c_k² − y²)/(c_k² − x²))`.
pub fn check_log_identity(x: f64, y: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_cosine_window("x", x)?;
    check_cosine_window("y", y)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    let (x2, y2) = (x * x, y * y);
    let mut acc = CompensatedSum::new();
    for k in 1..=k_max {
        let c2 = HalfIntegerGrid { k }.c().powi(2);
        acc.add((-y2 / c2).ln_1p() - (-x2 / c2).ln_1p());
    }
    let lhs = y.cos().ln() - x.cos().ln();
    IdentityReport::new(
        "log",
        &[("x", x), ("y", y), ("K", k_max as f64)],
        lhs.into(),
        acc.value().into(),
        log_identity_tail(x, y, k_max),
        k_max,
        tol,
        vec![],
    )
}

pub(crate) fn check_prop1_box(x: f64, y: f64) -> Result<()> {
    check_finite("x", x)?;
    check_finite("y", y)?;
    if x.abs() >= PROP1_X_BOUND {
        return Err(Error::domain(
            format!("|x| must be below pi/(2*sqrt(2)) = {PROP1_X_BOUND:.6}"),
            x.to_string(),
        ));
    }
    let yb = prop1_y_bound();
    if y.abs() >= yb {
        return Err(Error::domain(
            format!("|y| must be below sqrt(pi/2) = {yb:.6}"),
            y.to_string(),
        ));
    }
    Ok(())
}

/// Shared body of the alternating/geometric decomposition:
/// `Σ_{k≤K} [L(1, x²/(c_k² − x²)) − M(1, y²/c_k²)]`, each inner series summed
/// to `tol/(10K)` and cross-checked against its closed form.
pub(crate) fn decomposition_report(
    name: &str,
    inputs: &[(&str, f64)],
    x: f64,
    y: f64,
    k_max: u64,
    tol: f64,
    lhs: f64,
) -> Result<IdentityReport> {
    let inner_tol = tol / (10.0 * k_max as f64);
    let p = Precision::absolute(inner_tol)?;
    let s1 = Complex64::new(1.0, 0.0);
    let (x2, y2) = (x * x, y * y);
    let mut acc = CompensatedSum::new();
    let mut inner_tail = CompensatedSum::new();
    let mut inner_terms: u64 = 0;
    let mut worst_crosscheck: f64 = 0.0;
    for k in 1..=k_max {
        let c2 = HalfIntegerGrid { k }.c().powi(2);
        let a = x2 / (c2 - x2);
        let b = y2 / c2;
        let l = eval_alt(s1, a, &p)?;
        let m = eval_geo(s1, b, &p)?;
        acc.add(l.value.re - m.value.re);
        inner_tail.add(l.tail_bound + m.tail_bound);
        inner_terms += l.terms_used + m.terms_used;
        let dev_l = (l.value - closed_form_s1(Family::Alt, a)?).norm() - l.tail_bound;
        let dev_m = (m.value - closed_form_s1(Family::Geo, b)?).norm() - m.tail_bound;
        worst_crosscheck = worst_crosscheck.max(dev_l).max(dev_m);
    }
    let mut notes = vec![format!("inner series terms: {inner_terms}")];
    if worst_crosscheck > inner_tol {
        notes.push(format!(
            "inner closed-form cross-check exceeded tolerance by {worst_crosscheck:e}"
        ));
    }
    IdentityReport::new(
        name,
        inputs,
        lhs.into(),
        acc.value().into(),
        log_identity_tail(x, y, k_max) + inner_tail.value(),
        k_max,
        tol,
        notes,
    )
}

/// `ln(cos y / cos x) = Σ_k [L_k(1, x²/(c_k² − x²)) − M_k(1, y²/c_k²)]` on the
/// box `|x| < π/(2√2)`, `|y| < √(π/2)`.
pub fn check_prop1(x: f64, y: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_prop1_box(x, y)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    decomposition_report(
        "prop1",
        &[("x", x), ("y", y), ("K", k_max as f64)],
        x,
        y,
        k_max,
        tol,
        y.cos().ln() - x.cos().ln(),
    )
}

/// Twisted identity of the θ-family: the decomposition evaluated at
/// `x − y cot θ` and `y / sin θ`. At θ = π/2 this runs exactly the
/// computation of [`check_prop1`].
pub fn check_prop3_twisted(
    x: f64,
    y: f64,
    theta: f64,
    k_max: u64,
    tol: f64,
) -> Result<IdentityReport> {
    check_finite("x", x)?;
    check_finite("y", y)?;
    check_finite("theta", theta)?;
    let (dist, nearest) = distance_to_pi_multiple(theta);
    if dist <= SINGULAR_GUARD {
        return Err(Error::domain(
            format!(
                "sin(theta) vanishes near theta = {nearest}; the surface degenerates to a plane"
            ),
            theta.to_string(),
        ));
    }
    let shifted_x = x - y * cot_snapped(theta);
    let scaled_y = y / theta.sin();
    check_prop1_box(shifted_x, scaled_y)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    decomposition_report(
        "prop3",
        &[("x", x), ("y", y), ("theta", theta), ("K", k_max as f64)],
        shifted_x,
        scaled_y,
        k_max,
        tol,
        scaled_y.cos().ln() - shifted_x.cos().ln(),
    )
}

/// `arctan(tanh X · cot A) = arctan(X/A) + Σ_k [arctan(X/(kπ + A)) − arctan(X/(kπ − A))]`.
pub fn check_entry11(x: f64, a: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_finite("X", x)?;
    check_finite("A", a)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    let (dist, nearest) = distance_to_pi_multiple(a);
    if dist <= SINGULAR_GUARD {
        return Err(Error::domain(
            format!("A must stay away from multiples of pi (nearest {nearest})"),
            a.to_string(),
        ));
    }
    let alpha = a.abs() / PI;
    let kf = k_max as f64;
    if kf <= alpha {
        return Err(Error::domain("K must exceed |A|/pi", k_max.to_string()));
    }
    let mut acc = CompensatedSum::new();
    acc.add((x / a).atan());
    for k in 1..=k_max {
        let kpi = k as f64 * PI;
        acc.add((x / (kpi + a)).atan() - (x / (kpi - a)).atan());
    }
    let lhs = (x.tanh() * cot_snapped(a)).atan();
    // |term_k| ≤ 2|AX|/(k²π² − A²); Σ_{k>K} 1/(k² − α²) ≤ ln((K+α)/(K−α))/(2α).
    let sum_bound = if alpha > 0.0 {
        (2.0 * alpha / (kf - alpha)).ln_1p() / (2.0 * alpha)
    } else {
        1.0 / kf
    };
    let tail_bound = 2.0 * (2.0 * (a * x).abs() / (PI * PI)) * sum_bound;
    IdentityReport::new(
        "entry11",
        &[("X", x), ("A", a), ("K", kf)],
        lhs.into(),
        acc.value().into(),
        tail_bound,
        k_max,
        tol,
        vec![NOTE_ENTRY11.to_string()],
    )
}

/// `arctan(2X/π) = Σ_k [arctan(X/c_k) − arctan(X/d_k)]`.
pub fn check_arctan_telescope(x: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_finite("X", x)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    let mut acc = CompensatedSum::new();
    for k in 1..=k_max {
        let g = HalfIntegerGrid { k };
        acc.add((x / g.c()).atan() - (x / g.d()).atan());
    }
    let lhs = (2.0 * x / PI).atan();
    IdentityReport::new(
        "telescope",
        &[("X", x), ("K", k_max as f64)],
        lhs.into(),
        acc.value().into(),
        2.0 * x.abs() / (PI * k_max as f64),
        k_max,
        tol,
        vec![],
    )
}

fn check_ratio(t: f64) -> Result<()> {
    check_finite("t", t)?;
    if t.abs() < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "requires |y| < |x|, i.e. |t| < 1",
            t.to_string(),
        ))
    }
}

/// `H(1, t) − H(1, −t)` and the sum of both tail bounds.
pub(crate) fn helicoid_bracket(t: f64, p: &Precision) -> Result<(Complex64, f64, u64)> {
    let s1 = Complex64::new(1.0, 0.0);
    let plus = eval_heli(s1, t, p)?;
    let minus = eval_heli(s1, -t, p)?;
    Ok((
        plus.value - minus.value,
        plus.tail_bound + minus.tail_bound,
        plus.terms_used + minus.terms_used,
    ))
}

/// `arctan t = −½ [H(1, t) − H(1, −t)]` for `|t| < 1`.
pub fn check_prop4_helicoid(t: f64, tol: f64) -> Result<IdentityReport> {
    check_ratio(t)?;
    check_tol(tol)?;
    let (bracket, tail, terms) = helicoid_bracket(t, &Precision::default())?;
    let rhs = -0.5 * bracket;
    IdentityReport::new(
        "prop4",
        &[("t", t)],
        t.atan().into(),
        rhs,
        0.5 * tail,
        terms,
        tol,
        vec![
            NOTE_HELICOID_SIGN.to_string(),
            format!("imaginary residue: {:e}", rhs.im.abs()),
        ],
    )
}

/// `H(1,t) − H(1,−t) = Σ_k {[H(1,e_k t) − H(1,−e_k t)] − [H(1,f_k t) − H(1,−f_k t)]}`.
pub fn check_prop6(t: f64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_ratio(t)?;
    check_tol(tol)?;
    check_terms(k_max)?;
    let inner = Precision::absolute(tol / (40.0 * k_max as f64))?;
    let (lhs, lhs_tail, _) = helicoid_bracket(t, &Precision::default())?;
    let mut acc = ComplexSum::new();
    let mut inner_tail = CompensatedSum::new();
    let mut terms: u64 = 0;
    for k in 1..=k_max {
        let g = HalfIntegerGrid { k };
        let (be, te, ne) = helicoid_bracket(g.e() * t, &inner)?;
        let (bf, tf, nf) = helicoid_bracket(g.f() * t, &inner)?;
        acc.add(be - bf);
        inner_tail.add(te + tf);
        terms += ne + nf;
    }
    let outer = 4.0 * t.abs() / (PI * k_max as f64);
    IdentityReport::new(
        "prop6",
        &[("t", t), ("K", k_max as f64)],
        lhs,
        acc.value(),
        outer + inner_tail.value() + lhs_tail,
        k_max,
        tol,
        vec![format!("inner series terms: {terms}")],
    )
}

//! Globally adaptive Gauss–Kronrod (10/21-point) quadrature for complex-valued
//! integrands on finite intervals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special_functions::ComplexSum;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Sum of per-segment |Kronrod − Gauss| differences.
    pub error: f64,
    pub segments: usize,
}

/// One 21-point Kronrod estimate on `[a, b]` and the |K21 − G10| difference.
pub fn gauss_kronrod21<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    for j in 0..10 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let kronrod = kronrod * half;
    let gauss = gauss * half;
    (kronrod, (kronrod - gauss).norm())
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

/// Adaptive integration of `f` over `[a, b]` until the summed error estimate
/// is at most `max(abs_tol, rel_tol·|I|)`.
pub fn integrate<F>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_segments: usize,
) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite("quadrature bounds"));
    }
    if a == b {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            segments: 0,
        });
    }
    let (value, error) = gauss_kronrod21(&f, a, b);
    let mut segments = vec![Segment { a, b, value, error }];
    loop {
        let (total, err) = totals(&segments);
        if !(total.re.is_finite() && total.im.is_finite() && err.is_finite()) {
            return Err(Error::NonFinite("quadrature"));
        }
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(QuadResult {
                value: total,
                error: err,
                segments: segments.len(),
            });
        }
        if segments.len() >= max_segments {
            return Err(Error::Convergence {
                what: "adaptive quadrature",
                terms: segments.len() as u64,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            return Err(Error::Convergence {
                what: "adaptive quadrature (interval underflow)",
                terms: segments.len() as u64,
            });
        }
        for (lo, hi) in [(seg.a, mid), (mid, seg.b)] {
            let (value, error) = gauss_kronrod21(&f, lo, hi);
            segments.push(Segment {
                a: lo,
                b: hi,
                value,
                error,
            });
        }
    }
}

fn totals(segments: &[Segment]) -> (Complex64, f64) {
    // Accumulate in left-endpoint order so the result does not depend on
    // the refinement history.
    let mut order: Vec<&Segment> = segments.iter().collect();
    order.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut acc = ComplexSum::new();
    let mut err = 0.0;
    for s in order {
        acc.add(s.value);
        err += s.error;
    }
    (acc.value(), err)
}

/// Real-valued convenience wrapper over [`integrate`].
pub fn integrate_real<F>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_segments: usize,
) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let r = integrate(
        |x| Complex64::new(f(x), 0.0),
        a,
        b,
        abs_tol,
        rel_tol,
        max_segments,
    )?;
    Ok((r.value.re, r.error))
}

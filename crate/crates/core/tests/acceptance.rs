//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.
//!
//! Run with `cargo test -p er-dirichlet --test acceptance`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

use er_dirichlet::functional_equation::{
    i5k_quad, lambda_expansion, lambda_expansion_terms, prop7_compare, quad_terms, FuncEqInput,
    LambdaShift,
};
use er_dirichlet::identities::{
    check_arctan_telescope, check_prop1, check_prop3_twisted, check_prop4_helicoid, check_prop6,
    prop1_y_bound, PROP1_X_BOUND,
};
use er_dirichlet::series::eval_alt;
use er_dirichlet::special_functions::{dirichlet_lambda, real_pow, ComplexSum};
use er_dirichlet::surfaces::{
    check_prop2, check_prop5, helicoid_we, mean_curvature_probe, scherk_we, SurfaceKind,
    ThetaFamilyParams,
};
use er_dirichlet::{Complex64, Error, Precision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst_oracle: f64 = 0.0;
    let mut count = 0;
    for x in linspace(-1.1, 1.1, 11) {
        for y in linspace(-1.25, 1.25, 11) {
            let (x, y) = (
                x.clamp(-PROP1_X_BOUND * 0.999, PROP1_X_BOUND * 0.999),
                y.clamp(-prop1_y_bound() * 0.999, prop1_y_bound() * 0.999),
            );
            let r = check_prop1(x, y, 100_000, 1e-5).map_err(e)?;
            ensure(
                r.pass && r.abs_residual <= r.tail_bound + r.tolerance,
                || format!("report failed at ({x}, {y}): {r:?}"),
            )?;
            let oracle = (y.cos() / x.cos()).ln();
            worst_oracle = worst_oracle.max((r.lhs.re - oracle).abs());
            count += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(worst_oracle <= 1e-13, || {
        format!("lhs oracle deviation {worst_oracle:e}")
    })?;
    ensure(secs < 10.0, || format!("sweep took {secs:.2} s"))?;
    Ok(format!(
        "{count} reports pass, lhs oracle deviation {worst_oracle:.1e}, {secs:.2} s"
    ))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let r = 0.5 * rng.gen::<f64>().sqrt() * 0.999_999;
        let zeta = Complex64::from_polar(r, rng.gen_range(-PI..PI));
        let p = scherk_we(zeta).map_err(e)?;
        let dev = (p.z - (p.y.cos() / p.x.cos()).ln()).abs();
        worst = worst.max(dev);
        let rep = check_prop2(zeta, 10_000, 1e-4).map_err(e)?;
        ensure(rep.pass, || {
            format!("decomposition failed at {zeta}: {rep:?}")
        })?;
    }
    ensure(worst <= 1e-12, || {
        format!("consistency deviation {worst:e}")
    })?;
    Ok(format!(
        "200 points, consistency {worst:.1e}, all decompositions pass"
    ))
}

fn criterion_3() -> Outcome {
    for theta in [PI / 6.0, PI / 4.0, PI / 3.0, FRAC_PI_2] {
        let r = check_prop3_twisted(0.4, 0.2, theta, 10_000, 1e-5).map_err(e)?;
        ensure(r.pass, || format!("theta = {theta}: {r:?}"))?;
    }
    let twisted = check_prop3_twisted(0.4, 0.2, FRAC_PI_2, 10_000, 1e-5).map_err(e)?;
    let plain = check_prop1(0.4, 0.2, 10_000, 1e-5).map_err(e)?;
    let same = twisted.lhs == plain.lhs
        && twisted.rhs == plain.rhs
        && twisted.abs_residual.to_bits() == plain.abs_residual.to_bits()
        && twisted.tail_bound.to_bits() == plain.tail_bound.to_bits();
    ensure(same, || {
        "theta = pi/2 report differs from Prop 1".to_string()
    })?;
    Ok("4 angles pass; theta = pi/2 bit-identical to Prop 1".to_string())
}

fn criterion_4() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_im: f64 = 0.0;
    for t in linspace(-0.9, 0.9, 19) {
        let r = check_prop4_helicoid(t, 1e-12).map_err(e)?;
        worst = worst.max((r.rhs.re - t.atan()).abs());
        worst_im = worst_im.max(r.rhs.im.abs());
    }
    ensure(worst <= 1e-12 && worst_im <= 1e-12, || {
        format!("|rhs - arctan t| = {worst:e}, imaginary residue {worst_im:e}")
    })?;
    Ok(format!(
        "19 values, max |rhs - arctan t| = {worst:.1e}, imaginary residue {worst_im:.1e}"
    ))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for x in [0.5, 1.0, FRAC_PI_2, 5.0] {
        let r = check_arctan_telescope(x, 10_000, 1e-12).map_err(e)?;
        ensure(r.abs_residual <= r.tail_bound, || format!("X = {x}: {r:?}"))?;
        parts.push(format!("{:.1e}/{:.1e}", r.abs_residual, r.tail_bound));
    }
    for t in [0.3, 0.5, 0.9] {
        let r = check_prop6(t, 10_000, 1e-3).map_err(e)?;
        ensure(r.pass, || format!("prop6 t = {t}: {r:?}"))?;
    }
    Ok(format!(
        "telescope residual/bound {}; Prop 6 passes at t = 0.3, 0.5, 0.9",
        parts.join(", ")
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut checked, mut rejected) = (0, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let r = rng.gen_range(0.2..=0.9);
        let phi = rng.gen_range(0.6..=2.5);
        let zeta = Complex64::from_polar(r, phi);
        let p = helicoid_we(zeta).map_err(e)?;
        match check_prop5(zeta, 1e-8) {
            Ok(rep) => {
                ensure(p.y.abs() < p.x.abs(), || {
                    format!("{zeta} accepted outside window")
                })?;
                ensure(rep.abs_residual <= 1e-8, || format!("{zeta}: {rep:?}"))?;
                worst = worst.max(rep.abs_residual);
                checked += 1;
            }
            Err(Error::Domain { .. }) => {
                ensure(p.y.abs() >= p.x.abs(), || {
                    format!("{zeta} wrongly rejected")
                })?;
                rejected += 1;
            }
            Err(other) => return Err(other.to_string()),
        }
    }
    for x in [0.2, 0.5, -0.7] {
        let res = check_prop5(c(x, 0.0), 1e-8);
        ensure(matches!(res, Err(Error::Domain { .. })), || {
            format!("real zeta = {x} not rejected")
        })?;
    }
    ensure(checked > 0, || "no sample inside |y| < |x|".to_string())?;
    Ok(format!(
        "{checked} checked (max residual mod pi {worst:.1e}), {rejected} outside |y|<|x| rejected, real axis rejected"
    ))
}

const ABEL_S: [(f64, f64); 5] = [
    (-1.0, 0.0),
    (-0.5, 0.0),
    (-2.5, 1.3),
    (0.0, 0.0),
    (0.5, 0.5),
];
const ABEL_A: [f64; 3] = [0.2, 0.5, 0.9];

fn criterion_7() -> Outcome {
    let p = Precision::default();
    let mut worst: f64 = 0.0;
    let mut worst_printed: f64 = 0.0;
    for (re, im) in ABEL_S {
        let s = c(re, im);
        for a in ABEL_A {
            let direct = eval_alt(s, a, &p).map_err(e)?.value;
            let t = quad_terms(s, a, 1e-10).map_err(e)?;
            let d = (direct - t.gamma()).norm();
            ensure(d <= 1e-7, || format!("s = {s}, a = {a}: deviation {d:e}"))?;
            worst = worst.max(d);
            worst_printed = worst_printed.max((direct + t.printed_layout()).norm());
        }
    }
    let g1 = quad_terms(c(-1.0, 0.0), 0.5, 1e-10).map_err(e)?.gamma().re;
    let g0 = quad_terms(c(0.0, 0.0), 0.5, 1e-10).map_err(e)?.gamma().re;
    ensure(
        (g1 - 2.0 / 9.0).abs() < 1e-7 && (g0 - 1.0 / 3.0).abs() < 1e-7,
        || format!("spot values {g1}, {g0}"),
    )?;
    Ok(format!(
        "15 pairs within {worst:.1e} using gamma = (I3+I4) - (I1+I2); printed layout I1+I2-I3-I4 equals -gamma to {worst_printed:.1e}; gamma(-1,0.5) = {g1:.7}, gamma(0,0.5) = {g0:.7}"
    ))
}

fn criterion_8() -> Outcome {
    use er_dirichlet::functional_equation::{closed_i2, closed_i4};
    let mut worst_rel: f64 = 0.0;
    let mut worst_rel_i1: f64 = 0.0;
    for (re, im) in ABEL_S {
        let s = c(re, im);
        for a in ABEL_A {
            let t = quad_terms(s, a, 1e-12).map_err(e)?;
            let i2 = closed_i2(s, a).map_err(e)?;
            let i4 = closed_i4(s, a).map_err(e)?;
            let r2 = (i2 - t.i2).norm() / t.i2.norm().max(f64::MIN_POSITIVE);
            let r4 = if t.i4.norm() == 0.0 {
                i4.norm()
            } else {
                (i4 - t.i4).norm() / t.i4.norm()
            };
            ensure(r2 <= 1e-8 && r4 <= 1e-8, || {
                format!("s = {s}, a = {a}: {r2:e} {r4:e}")
            })?;
            worst_rel = worst_rel.max(r2).max(r4);
            let shifted = quad_terms(s - 1.0, a, 1e-12).map_err(e)?;
            let rel = a.ln() / (s - 1.0) * shifted.i3;
            let d = (rel - t.i1).norm();
            ensure(d <= 1e-7, || {
                format!("I1 relation at s = {s}, a = {a}: {d:e}")
            })?;
            worst_rel_i1 = worst_rel_i1.max(d);
        }
    }
    let input = FuncEqInput::new(c(-1.0, 0.0), 0.5).map_err(e)?;
    let mut worst_i5: f64 = 0.0;
    for k in 0..=3 {
        let b = input.beta(k);
        let q = i5k_quad(c(-1.0, 0.0), 0.5, k, 1e-11).map_err(e)?.value;
        let d = (q - c(1.0 / (b * b + 1.0), 0.0)).norm();
        ensure(d <= 1e-9, || format!("I5k at k = {k}: {d:e}"))?;
        worst_i5 = worst_i5.max(d);
    }
    Ok(format!(
        "I2/I4 rel {worst_rel:.1e}; I1 = ln a/(s-1) I3(s-1) to {worst_rel_i1:.1e}; I5k(s=-1) = 1/(beta^2+1) to {worst_i5:.1e}"
    ))
}

fn direct_double_sum(s: Complex64, big_a: f64, shift: f64) -> Complex64 {
    let mut acc = ComplexSum::new();
    let terms = 2_000_000u64;
    for k in 0..terms {
        let n = 2.0 * k as f64 + 1.0;
        acc.add(real_pow(n, s - shift) / (big_a * big_a / (n * n) + 1.0));
    }
    let n = 2.0 * terms as f64 + 1.0;
    let ex = shift - s;
    acc.value() + real_pow(n, 1.0 - ex) / (2.0 * (ex - 1.0)) + 0.5 * real_pow(n, -ex)
}

fn criterion_9() -> Outcome {
    let l2 = dirichlet_lambda(c(2.0, 0.0)).map_err(e)?.value.re;
    let l4 = dirichlet_lambda(c(4.0, 0.0)).map_err(e)?.value.re;
    ensure((l2 - PI * PI / 8.0).abs() <= 1e-12, || {
        format!("lambda(2) = {l2}")
    })?;
    ensure((l4 - PI.powi(4) / 96.0).abs() <= 1e-12, || {
        format!("lambda(4) = {l4}")
    })?;
    let mut worst: f64 = 0.0;
    for s in [c(-1.0, 0.0), c(-2.3, 0.0)] {
        for big_a in [0.1, 0.5, 0.9] {
            for (shift, off) in [(LambdaShift::Two, 2.0), (LambdaShift::One, 1.0)] {
                let n = lambda_expansion_terms(s, big_a, shift, 1e-16);
                let v = lambda_expansion(s, big_a, shift, n).map_err(e)?.value;
                let d = (v - direct_double_sum(s, big_a, off)).norm();
                ensure(d <= 1e-10, || {
                    format!("s = {s}, A = {big_a}, {shift:?}: {d:e}")
                })?;
                worst = worst.max(d);
            }
        }
    }
    Ok(format!(
        "lambda(2), lambda(4) exact to 1e-12; expansion vs direct double sum {worst:.1e}"
    ))
}

fn criterion_10() -> Outcome {
    let mut lines = Vec::new();
    for s in [c(-1.0, 0.0), c(-2.5, 1.3)] {
        for a in [0.5, 0.9] {
            let rep = prop7_compare(s, a, 1e-7).map_err(e)?;
            ensure(rep.pass_abel, || {
                format!("Abel check failed at s = {s}, a = {a}")
            })?;
            ensure(!rep.per_term_table.is_empty(), || "empty table".to_string())?;
            let d = (rep.corrected_rhs - rep.gamma_direct).norm();
            ensure(d <= 1e-6, || {
                format!("corrected RHS off by {d:e} at s = {s}, a = {a}")
            })?;
            let dp = (rep.paper_rhs - rep.gamma_direct).norm();
            lines.push(format!("    s = {s}, a = {a}: gamma = {:.10}, corrected |d| = {d:.1e}, printed |d| = {dp:.3e}", rep.gamma_direct));
            for row in &rep.per_term_table {
                lines.push(format!(
                    "      {:<5} quad {:>+.8e}{:+.8e}i  printed diff {:.3e}  corrected diff {:.1e}",
                    row.term,
                    row.quadrature.re,
                    row.quadrature.im,
                    row.discrepancy,
                    row.corrected_discrepancy
                ));
            }
        }
    }
    Ok(format!(
        "Abel passes, corrected RHS within 1e-6 at 4 points; printed RHS reported:\n{}",
        lines.join("\n")
    ))
}

fn criterion_11() -> Outcome {
    let p = Precision::default();
    let v30 = eval_alt(c(30.0, 0.0), 0.9, &p).map_err(e)?.value;
    let v60 = eval_alt(c(60.0, 0.0), 0.5, &p).map_err(e)?.value;
    let d30 = (v30 - c(0.9, 0.0)).norm();
    let d60 = (v60 - c(0.5, 0.0)).norm();
    ensure(d30 <= 8e-9 && d60 <= 1e-15, || format!("{d30:e} {d60:e}"))?;
    Ok(format!(
        "|L(30,0.9) - 0.9| = {d30:.2e}, |L(60,0.5) - 0.5| = {d60:.2e}"
    ))
}

fn criterion_12() -> Outcome {
    let h = 1e-3;
    let mut worst: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for theta in [FRAC_PI_2, PI / 3.0] {
        let params = Some(ThetaFamilyParams::new(theta).map_err(e)?);
        for _ in 0..10 {
            let p = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let v = mean_curvature_probe(SurfaceKind::ScherkFamily, params, p, h).map_err(e)?;
            ensure(v.abs() <= 1e-5, || {
                format!("Scherk theta = {theta} at {p:?}: H = {v:e}")
            })?;
            worst = worst.max(v.abs());
        }
    }
    for _ in 0..10 {
        let p = (rng.gen_range(0.2..0.9), rng.gen_range(0.6..2.5));
        let v = mean_curvature_probe(SurfaceKind::HelicoidWe, None, p, h).map_err(e)?;
        ensure(v.abs() <= 1e-5, || format!("helicoid at {p:?}: H = {v:e}"))?;
        worst = worst.max(v.abs());
    }
    Ok(format!("30 probes, max |H| = {worst:.1e}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("Prop 1 sweep", criterion_1),
        ("Prop 2 Scherk consistency and decomposition", criterion_2),
        ("Prop 3 twisted family", criterion_3),
        ("Prop 4 helicoid bracket", criterion_4),
        ("arctan telescope and Prop 6", criterion_5),
        ("Prop 5 helicoid modulo pi", criterion_6),
        ("Abel identity", criterion_7),
        ("closed forms I2, I4, I1 relation, I5k", criterion_8),
        ("lambda machinery", criterion_9),
        ("Prop 7 functional equation", criterion_10),
        ("essential singularity", criterion_11),
        ("minimality probes", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} [PRIMARY] PASS  {name} ({secs:.2} s): {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {:>2} [PRIMARY] FAIL  {name} ({secs:.2} s): {why}",
                    i + 1
                )
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

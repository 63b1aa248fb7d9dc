//! Subcommand handlers. Each returns `Ok(pass)`; errors carry their exit code.

use er_dirichlet::functional_equation::prop7_compare;
use er_dirichlet::identities::{
    check_arctan_telescope, check_entry11, check_log_identity, check_prop1, check_prop3_twisted,
    check_prop4_helicoid, check_prop6, er_product_check,
};
use er_dirichlet::series::{probe_oscillation, probe_sigma_limit, Family, SeriesSpec};
use er_dirichlet::surfaces::{
    check_prop2, check_prop5, sample_mesh, Region, ResidualKind, ResidualOptions, SurfaceKind,
    ThetaFamilyParams,
};
use er_dirichlet::{Complex64, Precision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::{emit, json_text, mesh_csv, mesh_obj, reports_csv};
use crate::parse::{parse_complex, parse_grid, parse_region};
use crate::{
    CheckName, CliError, FamilyName, MeshFormat, ProbeArgs, ProbeKind, ResidualName, SeriesArgs,
    SurfaceArgs, SurfaceName, SweepArgs, TableFormat, VerifyArgs,
};

/// Inputs to one check; each check reads only the fields it needs.
#[derive(Debug, Clone, Copy, Default)]
struct Inputs {
    x: Option<f64>,
    y: Option<f64>,
    theta: Option<f64>,
    t: Option<f64>,
    a: Option<f64>,
    zeta: Option<Complex64>,
    s: Option<Complex64>,
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("missing required argument --{flag}"), flag))
}

fn check_settings(terms: u64, tol: f64) -> Result<(), CliError> {
    if terms < 1 {
        return Err(CliError::usage("--terms must be >= 1", terms.to_string()));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::usage("--tol must be positive", tol.to_string()));
    }
    Ok(())
}

/// Fails with a usage error when a required flag is missing, and with a
/// domain error when the core rejects the inputs.
fn run_check(name: CheckName, p: &Inputs, terms: u64, tol: f64) -> Result<(Value, bool), CliError> {
    let report = match name {
        CheckName::Funceq => {
            let r = prop7_compare(need(p.s, "s")?, need(p.a, "a")?, tol)?;
            let pass = r.pass_abel && r.pass_corrected;
            let v = serde_json::to_value(&r).expect("report serializes");
            return Ok((v, pass));
        }
        CheckName::Prop1 => check_prop1(need(p.x, "x")?, need(p.y, "y")?, terms, tol)?,
        CheckName::Log => check_log_identity(need(p.x, "x")?, need(p.y, "y")?, terms, tol)?,
        CheckName::Product => er_product_check(need(p.x, "x")?, need(p.a, "a")?, terms, tol)?,
        CheckName::Entry11 => check_entry11(need(p.x, "x")?, need(p.a, "a")?, terms, tol)?,
        CheckName::Telescope => check_arctan_telescope(need(p.x, "x")?, terms, tol)?,
        CheckName::Prop2 => check_prop2(need(p.zeta, "zeta")?, terms, tol)?,
        CheckName::Prop3 => check_prop3_twisted(
            need(p.x, "x")?,
            need(p.y, "y")?,
            need(p.theta, "theta")?,
            terms,
            tol,
        )?,
        CheckName::Prop4 => check_prop4_helicoid(need(p.t, "t")?, tol)?,
        CheckName::Prop5 => check_prop5(need(p.zeta, "zeta")?, tol)?,
        CheckName::Prop6 => check_prop6(need(p.t, "t")?, terms, tol)?,
    };
    let pass = report.pass;
    Ok((
        serde_json::to_value(&report).expect("report serializes"),
        pass,
    ))
}

fn complex_arg(text: &Option<String>, flag: &str) -> Result<Option<Complex64>, CliError> {
    text.as_deref()
        .map(|t| parse_complex(t).map_err(|m| CliError::usage(m, format!("--{flag} {t}"))))
        .transpose()
}

pub fn verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let c = &args.common;
    check_settings(c.terms, c.tol)?;
    let inputs = Inputs {
        x: args.x,
        y: args.y,
        theta: args.theta,
        t: args.t,
        a: args.a,
        zeta: complex_arg(&args.zeta, "zeta")?,
        s: complex_arg(&args.s, "s")?,
    };
    let (report, pass) = run_check(args.name, &inputs, c.terms, c.tol)?;
    emit(&json_text(&report), c.output.as_deref())?;
    Ok(pass)
}

/// Named sweep axes, in the order they nest (first axis outermost).
fn sweep_axes(args: &SweepArgs) -> Result<Vec<(&'static str, Vec<f64>)>, CliError> {
    let wanted: &[&'static str] = match args.name {
        CheckName::Prop1 | CheckName::Log => &["x", "y"],
        CheckName::Product | CheckName::Entry11 => &["x", "a"],
        CheckName::Telescope => &["x"],
        CheckName::Prop2 => &["zeta-re", "zeta-im"],
        CheckName::Prop3 => &["x", "y", "theta"],
        CheckName::Prop4 | CheckName::Prop6 => &["t"],
        CheckName::Prop5 => &["r", "phi"],
        CheckName::Funceq => &["s-re", "s-im", "a"],
    };
    let raw = |flag: &str| -> &Option<String> {
        match flag {
            "x" => &args.x,
            "y" => &args.y,
            "theta" => &args.theta,
            "t" => &args.t,
            "a" => &args.a,
            "zeta-re" => &args.zeta_re,
            "zeta-im" => &args.zeta_im,
            "r" => &args.r,
            "phi" => &args.phi,
            "s-re" => &args.s_re,
            "s-im" => &args.s_im,
            _ => unreachable!("axis names are fixed above"),
        }
    };
    wanted
        .iter()
        .map(|&flag| {
            let values = match raw(flag) {
                Some(text) => {
                    parse_grid(text).map_err(|m| CliError::usage(m, format!("--{flag} {text}")))?
                }
                // The imaginary part of s defaults to zero; every other axis is required.
                None if flag == "s-im" => vec![0.0],
                None => {
                    return Err(CliError::usage(
                        format!("missing required axis --{flag}"),
                        flag,
                    ))
                }
            };
            Ok((flag, values))
        })
        .collect()
}

fn inputs_from(point: &[(&'static str, f64)]) -> Inputs {
    let get = |name: &str| point.iter().find(|(k, _)| *k == name).map(|&(_, v)| v);
    let pair = |a: &str, b: &str| Some(Complex64::new(get(a)?, get(b)?));
    let polar = || Some(Complex64::from_polar(get("r")?, get("phi")?));
    Inputs {
        x: get("x"),
        y: get("y"),
        theta: get("theta"),
        t: get("t"),
        a: get("a"),
        zeta: pair("zeta-re", "zeta-im").or_else(polar),
        s: pair("s-re", "s-im"),
    }
}

fn grid_points(axes: &[(&'static str, Vec<f64>)]) -> Vec<Vec<(&'static str, f64)>> {
    let mut points: Vec<Vec<(&'static str, f64)>> = vec![Vec::new()];
    for (name, values) in axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push((*name, v));
                    q
                })
            })
            .collect();
    }
    points
}

/// Uniform samples in the bounding interval of each axis.
fn random_points(
    axes: &[(&'static str, Vec<f64>)],
    n: usize,
    seed: u64,
) -> Vec<Vec<(&'static str, f64)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranges: Vec<(&'static str, f64, f64)> = axes
        .iter()
        .map(|(name, v)| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            (*name, lo, hi)
        })
        .collect();
    (0..n)
        .map(|_| {
            ranges
                .iter()
                .map(|&(name, lo, hi)| (name, if hi > lo { rng.gen_range(lo..hi) } else { lo }))
                .collect()
        })
        .collect()
}

pub fn sweep(args: &SweepArgs) -> Result<bool, CliError> {
    let c = &args.common;
    check_settings(c.terms, c.tol)?;
    let axes = sweep_axes(args)?;
    let points = match args.random {
        Some(n) => random_points(&axes, n, args.seed),
        None => grid_points(&axes),
    };
    if points.is_empty() {
        return Err(CliError::usage("sweep has no points", "--random 0"));
    }
    let results: Vec<Result<(Value, bool), CliError>> = points
        .par_iter()
        .map(|p| run_check(args.name, &inputs_from(p), c.terms, c.tol))
        .collect();

    let mut rows = Vec::with_capacity(results.len());
    let mut all_pass = true;
    let mut first_invalid = None;
    for r in results {
        match r {
            Ok((v, pass)) => {
                all_pass &= pass;
                rows.push(v);
            }
            Err(e @ CliError::Domain { .. }) => {
                if e.is_usage() || !args.skip_invalid {
                    return Err(e);
                }
                first_invalid.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    if rows.is_empty() {
        return Err(first_invalid.expect("no rows implies at least one invalid point"));
    }
    let text = match args.format {
        TableFormat::Json => json_text(&Value::Array(rows)),
        TableFormat::Csv => reports_csv(&rows),
    };
    emit(&text, c.output.as_deref())?;
    Ok(all_pass)
}

pub fn surface(args: &SurfaceArgs) -> Result<bool, CliError> {
    let kind = match args.surface {
        SurfaceName::ScherkWe => SurfaceKind::ScherkWe,
        SurfaceName::ScherkFamily => SurfaceKind::ScherkFamily,
        SurfaceName::Helicoid => SurfaceKind::HelicoidWe,
    };
    let region = match (&args.region, args.r) {
        (Some(_), Some(_)) => {
            return Err(CliError::usage(
                "give either --region or --r, not both",
                "--r",
            ))
        }
        (Some(text), None) => {
            let [u0, u1, v0, v1] =
                parse_region(text).map_err(|m| CliError::usage(m, format!("--region {text}")))?;
            Region::new(u0, u1, v0, v1)?
        }
        (None, Some(r)) if kind == SurfaceKind::ScherkWe => Region::new(-r, r, -r, r)?,
        (None, Some(r)) => {
            return Err(CliError::usage(
                "--r applies to scherk-we only",
                r.to_string(),
            ))
        }
        (None, None) => Region::default_for(kind),
    };
    let params = match kind {
        SurfaceKind::ScherkFamily => Some(ThetaFamilyParams::new(args.theta)?),
        _ => None,
    };
    check_settings(args.terms, args.tol)?;
    let residual = ResidualOptions {
        kind: match args.residual {
            ResidualName::None => ResidualKind::None,
            ResidualName::Prop1 => ResidualKind::Prop1,
            ResidualName::Prop2 => ResidualKind::Prop2,
            ResidualName::Prop4 => ResidualKind::Prop4,
            ResidualName::Prop5 => ResidualKind::Prop5,
        },
        terms: args.terms,
        tol: args.tol,
    };
    let mesh = sample_mesh(kind, params, region, args.nu, args.nv, &residual)?;
    let text = match args.format {
        MeshFormat::Obj => mesh_obj(&mesh),
        MeshFormat::Csv => mesh_csv(&mesh),
    };
    let summary = json!({
        "surface": kind.to_string(),
        "nu": mesh.nu,
        "nv": mesh.nv,
        "vertices": mesh.vertices.len(),
        "faces": mesh.faces.len(),
        "valid": mesh.valid.iter().filter(|&&v| v).count(),
        "residual": residual.kind.to_string(),
        "max_residual": mesh.max_residual(),
    });
    match &args.output {
        Some(path) => {
            emit(&text, Some(path))?;
            emit(&json_text(&summary), None)?;
        }
        None => {
            emit(&text, None)?;
            eprint!("{}", json_text(&summary));
        }
    }
    Ok(true)
}

pub fn series(args: &SeriesArgs) -> Result<bool, CliError> {
    let family = match args.family {
        FamilyName::Alt => Family::Alt,
        FamilyName::Geo => Family::Geo,
        FamilyName::Heli => Family::Heli,
    };
    let s = parse_complex(&args.s).map_err(|m| CliError::usage(m, format!("--s {}", args.s)))?;
    let precision = match args.tol {
        Some(tol) => Precision::absolute(tol)?,
        None => Precision::default(),
    };
    let spec = SeriesSpec {
        family,
        s,
        param: args.param,
    };
    spec.validate()?;
    let r = spec.eval(&precision)?;
    let out = json!({
        "value_re": r.value.re,
        "value_im": r.value.im,
        "terms_used": r.terms_used,
        "tail_bound": r.tail_bound,
    });
    emit(&json_text(&out), args.output.as_deref())?;
    Ok(true)
}

pub fn probe(args: &ProbeArgs) -> Result<bool, CliError> {
    let sigmas = parse_grid(&args.sigma)
        .map_err(|m| CliError::usage(m, format!("--sigma {}", args.sigma)))?;
    let (samples, pass) = match args.kind {
        ProbeKind::SigmaLimit => {
            let mut pass = true;
            let mut out = Vec::with_capacity(sigmas.len());
            for &sigma in &sigmas {
                let p = probe_sigma_limit(args.a, sigma)?;
                pass &= p.within_bound();
                out.push(json!({
                    "sigma": sigma,
                    "value_re": p.result.value.re,
                    "value_im": p.result.value.im,
                    "deviation": p.deviation,
                    "bound": p.bound,
                    "within_bound": p.within_bound(),
                    "terms_used": p.result.terms_used,
                }));
            }
            (out, pass)
        }
        ProbeKind::Oscillation => {
            let text = args
                .t
                .as_deref()
                .ok_or_else(|| CliError::usage("missing required argument --t", "t"))?;
            let ts = parse_grid(text).map_err(|m| CliError::usage(m, format!("--t {text}")))?;
            let mut out = Vec::new();
            for &sigma in &sigmas {
                let values = probe_oscillation(args.a, sigma, &ts)?;
                out.extend(ts.iter().zip(values).map(|(&t, v)| {
                    json!({"sigma": sigma, "t": t, "value_re": v.re, "value_im": v.im, "abs": v.norm()})
                }));
            }
            (out, true)
        }
    };
    emit(&json_text(&Value::Array(samples)), args.output.as_deref())?;
    Ok(pass)
}

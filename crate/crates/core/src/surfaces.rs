//! Scherk's surface, its twisted θ-family and the helicoid: Weierstrass–Enneper
//! parametrizations, the identity checks attached to each surface, mesh
//! sampling and a finite-difference mean-curvature probe.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::identities::{
    check_prop1, check_prop1_box, check_prop3_twisted, check_prop4_helicoid, decomposition_report,
    helicoid_bracket, IdentityReport, SINGULAR_GUARD,
};
use crate::precision::Precision;
use crate::special_functions::{principal_arctan, principal_log};

/// Largest deviation tolerated in `z(ζ) = log(cos y(ζ)/cos x(ζ))` before any
/// series is involved.
pub const SCHERK_CONSISTENCY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SurfacePoint3 {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(SurfacePoint3 { x, y, z })
        } else {
            Err(Error::NonFinite("surface point"))
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl Add for SurfacePoint3 {
    type Output = SurfacePoint3;

    fn add(self, o: SurfacePoint3) -> SurfacePoint3 {
        SurfacePoint3 {
            x: self.x + o.x,
            y: self.y + o.y,
            z: self.z + o.z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaFamilyParams {
    pub theta: f64,
}

impl ThetaFamilyParams {
    pub fn new(theta: f64) -> Result<Self> {
        if theta.is_finite() {
            Ok(ThetaFamilyParams { theta })
        } else {
            Err(Error::domain("theta must be finite", theta.to_string()))
        }
    }

    /// Whether the twisted surface is non-degenerate (`|sin θ| > 10⁻⁸`).
    pub fn is_twisted(&self) -> bool {
        self.theta.sin().abs() > SINGULAR_GUARD
    }
}

impl Default for ThetaFamilyParams {
    fn default() -> Self {
        ThetaFamilyParams { theta: FRAC_PI_2 }
    }
}

fn guard_points(zeta: Complex64, points: &[Complex64], what: &str) -> Result<()> {
    for &p in points {
        if (zeta - p).norm() < SINGULAR_GUARD {
            return Err(Error::domain(
                format!("{what} is singular at {p}; zeta is within {SINGULAR_GUARD:e}"),
                zeta.to_string(),
            ));
        }
    }
    Ok(())
}

fn check_zeta(zeta: Complex64) -> Result<()> {
    if zeta.re.is_finite() && zeta.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("zeta must be finite", zeta.to_string()))
    }
}

/// Scherk's surface from its Weierstrass–Enneper data:
/// `x = 2 Re arctan ζ`, `y = −Im log((1+ζ)/(1−ζ))`, `z = Re log((1+ζ²)/(1−ζ²))`.
pub fn scherk_we(zeta: Complex64) -> Result<SurfacePoint3> {
    check_zeta(zeta)?;
    let one = Complex64::new(1.0, 0.0);
    guard_points(
        zeta,
        &[one, -one, Complex64::i(), -Complex64::i()],
        "the Scherk parametrization",
    )?;
    let x = 2.0 * principal_arctan(zeta)?.re;
    let y = -principal_log((one + zeta) / (one - zeta))?.im;
    let z2 = zeta * zeta;
    let z = principal_log((one + z2) / (one - z2))?.re;
    SurfacePoint3::new(x, y, z)
}

/// Series decomposition of Scherk's height `z(ζ)` at `x(ζ), y(ζ)`, for `|ζ| < ½`.
///
/// The exact consistency `z = log(cos y / cos x)` is recorded as input
/// `consistency`; a deviation above 10⁻¹² fails the report regardless of
/// the series residual.
pub fn check_prop2(zeta: Complex64, k_max: u64, tol: f64) -> Result<IdentityReport> {
    check_zeta(zeta)?;
    if zeta.norm() >= 0.5 {
        return Err(Error::domain("requires |zeta| < 1/2", zeta.to_string()));
    }
    let p = scherk_we(zeta)?;
    check_prop1_box(p.x, p.y)?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain("tolerance must be positive", tol.to_string()));
    }
    if k_max == 0 {
        return Err(Error::domain("need at least one term", "0"));
    }
    let consistency = (p.z - (p.y.cos().ln() - p.x.cos().ln())).abs();
    let mut report = decomposition_report(
        "prop2",
        &[
            ("zeta_re", zeta.re),
            ("zeta_im", zeta.im),
            ("K", k_max as f64),
            ("consistency", consistency),
        ],
        p.x,
        p.y,
        k_max,
        tol,
        p.z,
    )?;
    if consistency > SCHERK_CONSISTENCY_TOL {
        report.pass = false;
        report.notes.push(format!(
            "parametric consistency z = log(cos y/cos x) violated by {consistency:e}"
        ));
    }
    Ok(report)
}

/// `α(u) = (u, 0, −log cos u)`
pub fn scherk_alpha(u: f64) -> Result<SurfacePoint3> {
    let c = u.cos();
    if !(c > 0.0) {
        return Err(Error::domain("requires cos u > 0", u.to_string()));
    }
    SurfacePoint3::new(u, 0.0, -c.ln())
}

/// `β_θ(v) = (v cos θ, v sin θ, log cos v)`
pub fn scherk_beta(v: f64, theta: f64) -> Result<SurfacePoint3> {
    let c = v.cos();
    if !(c > 0.0) {
        return Err(Error::domain("requires cos v > 0", v.to_string()));
    }
    let (s, t) = theta.sin_cos();
    SurfacePoint3::new(v * t, v * s, c.ln())
}

/// `X_θ(u, v) = (u + v cos θ, v sin θ, log(cos v / cos u))`, assembled as
/// `α(u) + β_θ(v)` so the translation decomposition holds bit for bit.
pub fn scherk_family(u: f64, v: f64, theta: f64) -> Result<SurfacePoint3> {
    if !theta.is_finite() {
        return Err(Error::domain("theta must be finite", theta.to_string()));
    }
    Ok(scherk_alpha(u)? + scherk_beta(v, theta)?)
}

/// The helicoid: `x = −½ Im(ζ + 1/ζ)`, `y = ½ Re(ζ − 1/ζ)`, `z = −π/2 + arg ζ`.
pub fn helicoid_we(zeta: Complex64) -> Result<SurfacePoint3> {
    check_zeta(zeta)?;
    guard_points(
        zeta,
        &[Complex64::new(0.0, 0.0)],
        "the helicoid parametrization",
    )?;
    let inv = zeta.inv();
    let x = -0.5 * (zeta + inv).im;
    let y = 0.5 * (zeta - inv).re;
    let z = -FRAC_PI_2 + principal_log(zeta)?.im;
    SurfacePoint3::new(x, y, z)
}

/// Helicoid height against `−½ Re[H(1, y/x) − H(1, −y/x)]`, modulo π.
///
/// Requires `|y(ζ)| < |x(ζ)|` pointwise; real ζ (where `x = 0`) is rejected.
/// The multiple of π added to the right side is reported as `branch_shift`.
pub fn check_prop5(zeta: Complex64, tol: f64) -> Result<IdentityReport> {
    check_zeta(zeta)?;
    if zeta.norm() >= 1.0 {
        return Err(Error::domain("requires |zeta| < 1", zeta.to_string()));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain("tolerance must be positive", tol.to_string()));
    }
    let p = helicoid_we(zeta)?;
    if !(p.y.abs() < p.x.abs()) {
        return Err(Error::domain(
            format!(
                "requires |y| < |x| on the helicoid; here x = {:e}, y = {:e}",
                p.x, p.y
            ),
            zeta.to_string(),
        ));
    }
    let t = p.y / p.x;
    let (bracket, tail, terms) = helicoid_bracket(t, &Precision::default())?;
    let principal = -0.5 * bracket.re;
    let shift = ((p.z - principal) / PI).round();
    let rhs = principal + shift * PI;
    IdentityReport::new(
        "prop5",
        &[
            ("zeta_re", zeta.re),
            ("zeta_im", zeta.im),
            ("ratio", t),
            ("branch_shift", shift),
        ],
        p.z.into(),
        rhs.into(),
        0.5 * tail,
        terms,
        tol,
        vec![
            format!("equality modulo pi: right side shifted by {shift}*pi"),
            format!("imaginary residue: {:e}", 0.5 * bracket.im.abs()),
        ],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    /// Parameter plane is `(Re ζ, Im ζ)`.
    ScherkWe,
    /// Parameter plane is `(u, v)`.
    ScherkFamily,
    /// Parameter plane is polar `(r, φ)` with `ζ = r e^{iφ}`.
    HelicoidWe,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::ScherkWe => "scherk-we",
            SurfaceKind::ScherkFamily => "scherk-family",
            SurfaceKind::HelicoidWe => "helicoid",
        })
    }
}

impl FromStr for SurfaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "scherk-we" | "scherk" => Ok(SurfaceKind::ScherkWe),
            "scherk-family" | "family" => Ok(SurfaceKind::ScherkFamily),
            "helicoid" | "helicoid-we" => Ok(SurfaceKind::HelicoidWe),
            other => Err(Error::domain("unknown surface", other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidualKind {
    None,
    Prop1,
    Prop2,
    Prop4,
    Prop5,
}

impl fmt::Display for ResidualKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidualKind::None => "none",
            ResidualKind::Prop1 => "prop1",
            ResidualKind::Prop2 => "prop2",
            ResidualKind::Prop4 => "prop4",
            ResidualKind::Prop5 => "prop5",
        })
    }
}

impl FromStr for ResidualKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(ResidualKind::None),
            "prop1" => Ok(ResidualKind::Prop1),
            "prop2" => Ok(ResidualKind::Prop2),
            "prop4" => Ok(ResidualKind::Prop4),
            "prop5" => Ok(ResidualKind::Prop5),
            other => Err(Error::domain("unknown residual check", other)),
        }
    }
}

/// Per-vertex identity check used to colour a mesh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualOptions {
    pub kind: ResidualKind,
    /// Outer truncation for the decomposition checks.
    pub terms: u64,
    pub tol: f64,
}

impl ResidualOptions {
    pub fn new(kind: ResidualKind) -> Self {
        ResidualOptions {
            kind,
            terms: 10_000,
            tol: 1e-4,
        }
    }
}

/// Axis-aligned rectangle `[u0, u1] × [v0, v1]` in the parameter plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub u0: f64,
    pub u1: f64,
    pub v0: f64,
    pub v1: f64,
}

impl Region {
    pub fn new(u0: f64, u1: f64, v0: f64, v1: f64) -> Result<Self> {
        for v in [u0, u1, v0, v1] {
            if !v.is_finite() {
                return Err(Error::domain("region bounds must be finite", v.to_string()));
            }
        }
        if !(u0 < u1 && v0 < v1) {
            return Err(Error::domain(
                "region must have u0 < u1 and v0 < v1",
                format!("[{u0}, {u1}] x [{v0}, {v1}]"),
            ));
        }
        Ok(Region { u0, u1, v0, v1 })
    }

    /// Default sampling window for each surface.
    pub fn default_for(kind: SurfaceKind) -> Self {
        match kind {
            SurfaceKind::ScherkWe => Region {
                u0: -0.4,
                u1: 0.4,
                v0: -0.4,
                v1: 0.4,
            },
            SurfaceKind::ScherkFamily => Region {
                u0: -1.0,
                u1: 1.0,
                v0: -1.0,
                v1: 1.0,
            },
            SurfaceKind::HelicoidWe => Region {
                u0: 0.2,
                u1: 0.9,
                v0: 0.6,
                v1: 2.5,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    pub surface: SurfaceKind,
    pub nu: usize,
    pub nv: usize,
    pub vertices: Vec<SurfacePoint3>,
    /// Zero where no check applies or where the vertex is flagged.
    pub residuals: Vec<f64>,
    /// `false` marks vertices outside the chosen identity's validity window.
    pub valid: Vec<bool>,
    /// Quads `[i·nv+j, (i+1)·nv+j, (i+1)·nv+j+1, i·nv+j+1]`, counter-clockwise
    /// in the parameter plane.
    pub faces: Vec<[usize; 4]>,
    pub param_coords: Vec<(f64, f64)>,
}

impl Mesh {
    pub fn vertex_index(&self, i: usize, j: usize) -> usize {
        i * self.nv + j
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals
            .iter()
            .zip(&self.valid)
            .filter(|(_, &ok)| ok)
            .fold(0.0, |m, (&r, _)| m.max(r))
    }
}

fn polar(r: f64, phi: f64) -> Complex64 {
    Complex64::from_polar(r, phi)
}

/// Evaluates a surface at a point of its parameter plane.
pub fn evaluate_surface(
    kind: SurfaceKind,
    params: ThetaFamilyParams,
    u: f64,
    v: f64,
) -> Result<SurfacePoint3> {
    match kind {
        SurfaceKind::ScherkWe => scherk_we(Complex64::new(u, v)),
        SurfaceKind::ScherkFamily => scherk_family(u, v, params.theta),
        SurfaceKind::HelicoidWe => helicoid_we(polar(u, v)),
    }
}

fn vertex_residual(
    kind: SurfaceKind,
    params: ThetaFamilyParams,
    u: f64,
    v: f64,
    point: SurfacePoint3,
    opts: &ResidualOptions,
) -> Result<Option<f64>> {
    let report = match (opts.kind, kind) {
        (ResidualKind::None, _) => return Ok(Some(0.0)),
        (ResidualKind::Prop1, SurfaceKind::ScherkWe) => {
            check_prop1(point.x, point.y, opts.terms, opts.tol)
        }
        (ResidualKind::Prop1, SurfaceKind::ScherkFamily) => {
            check_prop3_twisted(point.x, point.y, params.theta, opts.terms, opts.tol)
        }
        (ResidualKind::Prop2, SurfaceKind::ScherkWe) => {
            check_prop2(Complex64::new(u, v), opts.terms, opts.tol)
        }
        (ResidualKind::Prop4, SurfaceKind::HelicoidWe) => {
            if !(point.y.abs() < point.x.abs()) {
                return Ok(None);
            }
            check_prop4_helicoid(point.y / point.x, opts.tol)
        }
        (ResidualKind::Prop5, SurfaceKind::HelicoidWe) => check_prop5(polar(u, v), opts.tol),
        (r, s) => {
            return Err(Error::domain(
                format!("residual {r} does not apply to surface {s}"),
                r.to_string(),
            ))
        }
    };
    match report {
        Ok(r) => Ok(Some(r.abs_residual)),
        Err(Error::Domain { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Samples an `nu × nv` grid over `region`, vertex `(i, j)` at index `i·nv + j`.
///
/// Vertices are evaluated in parallel and assembled in index order, so the
/// output does not depend on the thread count. A vertex on which the
/// parametrization itself fails is an error; a vertex outside the residual
/// check's window is kept and flagged.
pub fn sample_mesh(
    kind: SurfaceKind,
    params: Option<ThetaFamilyParams>,
    region: Region,
    nu: usize,
    nv: usize,
    residual: &ResidualOptions,
) -> Result<Mesh> {
    if nu < 2 || nv < 2 {
        return Err(Error::domain("need nu, nv >= 2", format!("{nu}x{nv}")));
    }
    let region = Region::new(region.u0, region.u1, region.v0, region.v1)?;
    let params = params.unwrap_or_default();
    let coord = |i: usize, n: usize, lo: f64, hi: f64| lo + (hi - lo) * (i as f64 / (n - 1) as f64);
    type Sample = ((f64, f64), SurfacePoint3, Option<f64>);
    let samples: Vec<Result<Sample>> = (0..nu * nv)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / nv, idx % nv);
            let u = coord(i, nu, region.u0, region.u1);
            let v = coord(j, nv, region.v0, region.v1);
            let point = evaluate_surface(kind, params, u, v)?;
            let r = vertex_residual(kind, params, u, v, point, residual)?;
            Ok(((u, v), point, r))
        })
        .collect();

    let mut mesh = Mesh {
        surface: kind,
        nu,
        nv,
        vertices: Vec::with_capacity(nu * nv),
        residuals: Vec::with_capacity(nu * nv),
        valid: Vec::with_capacity(nu * nv),
        faces: Vec::with_capacity((nu - 1) * (nv - 1)),
        param_coords: Vec::with_capacity(nu * nv),
    };
    for sample in samples {
        let (uv, point, r) = sample?;
        mesh.param_coords.push(uv);
        mesh.vertices.push(point);
        mesh.residuals.push(r.unwrap_or(0.0));
        mesh.valid.push(r.is_some());
    }
    if residual.kind != ResidualKind::None && !mesh.valid.iter().any(|&v| v) {
        return Err(Error::domain(
            format!(
                "no vertex of the region lies in the validity window of {}",
                residual.kind
            ),
            format!(
                "[{}, {}] x [{}, {}]",
                region.u0, region.u1, region.v0, region.v1
            ),
        ));
    }
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            let a = i * nv + j;
            mesh.faces.push([a, a + nv, a + nv + 1, a + 1]);
        }
    }
    Ok(mesh)
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn combine(terms: &[(f64, [f64; 3])], scale: f64) -> [f64; 3] {
    let mut out = [0.0; 3];
    for &(w, p) in terms {
        for (o, c) in out.iter_mut().zip(p) {
            *o += w * c;
        }
    }
    out.map(|c| c * scale)
}

const D1: [(i32, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];
const D2: [(i32, f64); 5] = [(-2, -1.0), (-1, 16.0), (0, -30.0), (1, 16.0), (2, -1.0)];

/// Mean curvature at parameter point `p` from fourth-order central
/// differences on a 5×5 stencil of spacing `h`.
pub fn mean_curvature_probe(
    kind: SurfaceKind,
    params: Option<ThetaFamilyParams>,
    p: (f64, f64),
    h: f64,
) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain("step must be positive", h.to_string()));
    }
    let params = params.unwrap_or_default();
    let mut grid = [[[0.0; 3]; 5]; 5];
    for (a, row) in grid.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let u = p.0 + (a as f64 - 2.0) * h;
            let v = p.1 + (b as f64 - 2.0) * h;
            *cell = evaluate_surface(kind, params, u, v)
                .map_err(|e| {
                    Error::domain(
                        format!("finite-difference stencil leaves the domain: {e}"),
                        format!("({u}, {v})"),
                    )
                })?
                .to_array();
        }
    }
    let at = |i: i32, j: i32| grid[(i + 2) as usize][(j + 2) as usize];
    let xu = combine(&D1.map(|(i, w)| (w, at(i, 0))), 1.0 / (12.0 * h));
    let xv = combine(&D1.map(|(j, w)| (w, at(0, j))), 1.0 / (12.0 * h));
    let xuu = combine(&D2.map(|(i, w)| (w, at(i, 0))), 1.0 / (12.0 * h * h));
    let xvv = combine(&D2.map(|(j, w)| (w, at(0, j))), 1.0 / (12.0 * h * h));
    let mut mixed = Vec::with_capacity(16);
    for (i, wi) in D1 {
        for (j, wj) in D1 {
            mixed.push((wi * wj, at(i, j)));
        }
    }
    let xuv = combine(&mixed, 1.0 / (144.0 * h * h));

    let normal = cross(xu, xv);
    let len = dot(normal, normal).sqrt();
    let (e1, f1, g1) = (dot(xu, xu), dot(xu, xv), dot(xv, xv));
    let det = e1 * g1 - f1 * f1;
    if !(len > 0.0) || !(det > 0.0) {
        return Err(Error::domain(
            "parametrization is singular at the probe point",
            format!("({}, {})", p.0, p.1),
        ));
    }
    let n = normal.map(|c| c / len);
    let (e2, f2, g2) = (dot(xuu, n), dot(xuv, n), dot(xvv, n));
    let h_mean = (e2 * g1 - 2.0 * f2 * f1 + g2 * e1) / (2.0 * det);
    if h_mean.is_finite() {
        Ok(h_mean)
    } else {
        Err(Error::NonFinite("mean curvature"))
    }
}

//! Writers for JSON reports, CSV tables and OBJ meshes.

use std::fmt::Write as _;
use std::path::Path;

use er_dirichlet::surfaces::Mesh;
use serde_json::Value;

use crate::CliError;

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Flattens a report object into `(column, cell)` pairs: scalars as-is,
/// nested objects as `parent_child`, arrays dropped.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    if let Value::Object(map) = v {
        for (k, child) in map {
            let key = if prefix.is_empty() || prefix == "inputs" {
                k.clone()
            } else {
                format!("{prefix}_{k}")
            };
            match child {
                Value::Object(_) => flatten(&key, child, out),
                Value::Array(_) => {}
                other => {
                    if let Some(s) = scalar(other) {
                        out.push((key, s));
                    }
                }
            }
        }
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV row per report; the header is the union of columns in first-seen order.
pub fn reports_csv(rows: &[Value]) -> String {
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            flatten("", r, &mut out);
            out
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut text = header
        .iter()
        .map(|h| csv_cell(h))
        .collect::<Vec<_>>()
        .join(",");
    text.push('\n');
    for row in &flat {
        let cells: Vec<String> = header
            .iter()
            .map(|h| {
                row.iter()
                    .find(|(k, _)| k == h)
                    .map(|(_, v)| csv_cell(v))
                    .unwrap_or_default()
            })
            .collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    text
}

/// Wavefront OBJ with quad faces and 1-based indices.
pub fn mesh_obj(mesh: &Mesh) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {} {}x{}", mesh.surface, mesh.nu, mesh.nv);
    for v in &mesh.vertices {
        let _ = writeln!(s, "v {:?} {:?} {:?}", v.x, v.y, v.z);
    }
    for f in &mesh.faces {
        let _ = writeln!(s, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1);
    }
    s
}

/// `u,v,x,y,z,residual,valid`, one row per vertex.
pub fn mesh_csv(mesh: &Mesh) -> String {
    let mut s = String::from("u,v,x,y,z,residual,valid\n");
    for (k, v) in mesh.vertices.iter().enumerate() {
        let (u, w) = mesh.param_coords[k];
        let _ = writeln!(
            s,
            "{u:?},{w:?},{:?},{:?},{:?},{:?},{}",
            v.x, v.y, v.z, mesh.residuals[k], mesh.valid[k]
        );
    }
    s
}

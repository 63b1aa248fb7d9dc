//! Parsers for complex literals and sweep grids.

use er_dirichlet::Complex64;

/// Parses `RE`, `IMi`, `RE+IMi` or `RE-IMi` (exponents allowed, `i` alone
/// meaning unit imaginary).
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let bad = || format!("invalid complex literal '{text}', expected RE+IMi");
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    // Split at the last sign that is not leading and not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| -> Result<f64, String> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(Complex64::new(re, imag(&body[k..])?))
        }
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// Parses `lo:hi:n` (n evenly spaced points, endpoints included) or a comma
/// separated list.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, String> {
    let bad = |what: &str| format!("invalid grid '{text}': {what}");
    let parts: Vec<&str> = text.split(':').collect();
    match parts.len() {
        1 => text
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad("expected numbers")))
            .collect(),
        3 => {
            let lo: f64 = parts[0]
                .trim()
                .parse()
                .map_err(|_| bad("bad lower bound"))?;
            let hi: f64 = parts[1]
                .trim()
                .parse()
                .map_err(|_| bad("bad upper bound"))?;
            let n: usize = parts[2]
                .trim()
                .parse()
                .map_err(|_| bad("bad point count"))?;
            match n {
                0 => Err(bad("need at least one point")),
                1 => Ok(vec![lo]),
                _ => Ok((0..n)
                    .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
                    .collect()),
            }
        }
        _ => Err(bad("expected lo:hi:n or a comma list")),
    }
}

/// Parses `u0:u1:v0:v1`.
pub fn parse_region(text: &str) -> Result<[f64; 4], String> {
    let vals: Result<Vec<f64>, _> = text.split(':').map(|p| p.trim().parse::<f64>()).collect();
    match vals {
        Ok(v) if v.len() == 4 => Ok([v[0], v[1], v[2], v[3]]),
        _ => Err(format!("invalid region '{text}', expected u0:u1:v0:v1")),
    }
}

//! Shared inputs for the criterion benchmarks in `benches/`.

use er_dirichlet::Complex64;

/// Exponents spanning the convergent, critical and continued regions.
pub fn sample_exponents() -> Vec<Complex64> {
    vec![
        Complex64::new(2.0, 0.0),
        Complex64::new(0.5, 14.1),
        Complex64::new(-1.0, 0.0),
        Complex64::new(-2.5, 1.3),
    ]
}

/// Points inside the prop1 validity box, from the centre towards the corner.
pub fn prop1_points() -> Vec<(f64, f64)> {
    vec![(0.0, 0.0), (0.3, 0.5), (0.9, 1.1)]
}

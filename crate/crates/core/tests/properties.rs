//! Property tests for the invariants of each module.

use std::f64::consts::{FRAC_PI_2, PI};

use er_dirichlet::identities::{
    check_arctan_telescope, check_entry11, check_log_identity, check_prop1, check_prop3_twisted,
    er_product_check, prop1_y_bound, IdentityReport, PROP1_X_BOUND,
};
use er_dirichlet::series::{closed_form_s1, eval_alt, eval_geo, eval_heli, Family};
use er_dirichlet::special_functions::complex_gamma;
use er_dirichlet::surfaces::{
    sample_mesh, scherk_alpha, scherk_beta, scherk_family, Region, ResidualKind, ResidualOptions,
    SurfaceKind,
};
use er_dirichlet::{Complex64, Precision};
use proptest::prelude::*;

fn fixed_terms(n: u64) -> Precision {
    Precision::new(f64::EPSILON / 2.0, 1e-300, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gamma_recurrence(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let s = Complex64::new(re, im);
        prop_assume!((s - s.re.round()).norm() > 1e-3 || s.re.round() > 0.0);
        let g = complex_gamma(s).unwrap();
        let g1 = complex_gamma(s + 1.0).unwrap();
        prop_assert!((g1 - s * g).norm() <= 1e-12 * g1.norm());
    }

    #[test]
    fn s1_closed_forms(p in 0.0f64..0.999, neg in any::<bool>()) {
        let one = Complex64::new(1.0, 0.0);
        let pr = Precision::default();
        let a = eval_alt(one, p, &pr).unwrap();
        prop_assert!((a.value - closed_form_s1(Family::Alt, p).unwrap()).norm() <= a.tail_bound + 1e-13);
        let b = if neg { -p } else { p };
        let g = eval_geo(one, b, &pr).unwrap();
        prop_assert!((g.value - closed_form_s1(Family::Geo, b).unwrap()).norm() <= g.tail_bound + 1e-13);
        let h = eval_heli(one, b, &pr).unwrap();
        prop_assert!((h.value - closed_form_s1(Family::Heli, b).unwrap()).norm() <= h.tail_bound + 1e-13);
    }

    #[test]
    fn tail_bound_is_honest(
        re in -3.0f64..3.0,
        im in -5.0f64..5.0,
        p in 0.05f64..0.95,
        n in 1u64..40,
        which in 0usize..3,
    ) {
        let s = Complex64::new(re, im);
        let eval = |prec: &Precision| match which {
            0 => eval_alt(s, p, prec),
            1 => eval_geo(s, -p, prec),
            _ => eval_heli(s, p, prec),
        };
        // Before the term ratio bound drops below 1 no tail bound exists yet.
        let short = match eval(&fixed_terms(n)) {
            Ok(r) => r,
            Err(er_dirichlet::Error::Convergence { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let long = eval(&fixed_terms(10 * short.terms_used)).unwrap();
        prop_assert!((short.value - long.value).norm() <= short.tail_bound * (1.0 + 1e-12) + 1e-15);
    }

    #[test]
    fn helicoid_bracket_symmetry(t in -0.99f64..0.99) {
        let one = Complex64::new(1.0, 0.0);
        let pr = Precision::default();
        let d = eval_heli(one, t, &pr).unwrap().value - eval_heli(one, -t, &pr).unwrap().value;
        prop_assert!((d.re + 2.0 * t.atan()).abs() <= 1e-12);
        prop_assert!(d.im.abs() <= 1e-12);
    }

    #[test]
    fn reports_are_consistent(x in -1.0f64..1.0, y in -1.2f64..1.2, k in 1u64..300) {
        let reports: Vec<IdentityReport> = vec![
            check_log_identity(x, y, k, 1e-9).unwrap(),
            check_prop1(x, y, k, 1e-9).unwrap(),
            er_product_check(x, y, k + 2, 1e-9).unwrap(),
            check_arctan_telescope(x, k, 1e-9).unwrap(),
        ];
        for r in reports {
            prop_assert_eq!(r.pass, r.abs_residual <= r.tail_bound + r.tolerance);
            prop_assert!(r.abs_residual <= r.tail_bound + 1e-12, "{:?}", r);
        }
    }

    #[test]
    fn arctan_checks_are_odd(x in 0.01f64..6.0, a in 0.1f64..3.0, k in 1u64..500) {
        let p = check_arctan_telescope(x, k, 1e-6).unwrap();
        let m = check_arctan_telescope(-x, k, 1e-6).unwrap();
        prop_assert_eq!(m.lhs, -p.lhs);
        prop_assert_eq!(m.abs_residual, p.abs_residual);
        if (a - PI).abs() > 0.01 && (k as f64) > a / PI {
            let p = check_entry11(x, a, k, 1e-6).unwrap();
            let m = check_entry11(-x, a, k, 1e-6).unwrap();
            prop_assert_eq!(m.lhs, -p.lhs);
            prop_assert_eq!(m.abs_residual, p.abs_residual);
        }
    }

    #[test]
    fn doubling_k(x in -1.0f64..1.0, y in -1.0f64..1.0, k in 2u64..200) {
        let a = check_log_identity(x, y, k, 1e-300).unwrap();
        let b = check_log_identity(x, y, 2 * k, 1e-300).unwrap();
        prop_assert!(a.abs_residual >= b.abs_residual - 2.0 * b.tail_bound);
    }

    #[test]
    fn twisted_at_right_angle(x in -1.0f64..1.0, y in -1.2f64..1.2) {
        let t = check_prop3_twisted(x, y, FRAC_PI_2, 50, 1e-6).unwrap();
        let p = check_prop1(x, y, 50, 1e-6).unwrap();
        prop_assert_eq!(t.lhs, p.lhs);
        prop_assert_eq!(t.rhs, p.rhs);
        prop_assert_eq!(t.abs_residual.to_bits(), p.abs_residual.to_bits());
    }

    #[test]
    fn translation_decomposition(u in -1.5f64..1.5, v in -1.5f64..1.5, theta in -PI..PI) {
        let x = scherk_family(u, v, theta).unwrap();
        let sum = scherk_alpha(u).unwrap() + scherk_beta(v, theta).unwrap();
        prop_assert_eq!(x, sum);
    }
}

#[test]
fn prop1_box_is_enforced() {
    assert!(check_prop1(PROP1_X_BOUND, 0.0, 10, 1e-6).is_err());
    assert!(check_prop1(0.0, prop1_y_bound(), 10, 1e-6).is_err());
}

#[test]
fn mesh_is_deterministic_across_thread_counts() {
    let opts = ResidualOptions {
        kind: ResidualKind::Prop2,
        terms: 500,
        tol: 1e-3,
    };
    let region = Region::new(-0.3, 0.3, -0.3, 0.3).unwrap();
    let build = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| sample_mesh(SurfaceKind::ScherkWe, None, region, 9, 7, &opts).unwrap())
    };
    let one = build(1);
    let many = build(4);
    assert_eq!(one, many);
    let bits = |m: &er_dirichlet::surfaces::Mesh| -> Vec<u64> {
        m.residuals.iter().map(|r| r.to_bits()).collect()
    };
    assert_eq!(bits(&one), bits(&many));
}

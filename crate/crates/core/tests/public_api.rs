use glinfo_core::materials::{parse_materials, to_file_format};
use glinfo_core::measures::{disequilibrium, fisher, shannon};
use glinfo_core::{
    builtin_materials, coherence_length, generalized_set, liu_identity, load_materials, lookup,
    measure_set, measures_at_temperature, solve_profile, verify_profile, CoherenceInput,
    DistributionKind, Error,
};
use proptest::prelude::*;

#[test]
fn catalog_file_drives_the_measures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.materials.csv");
    let mut text = to_file_format(&builtin_materials());
    text.push_str("# hypothetical\nXx,99,1,2.5\n");
    std::fs::write(&path, text).unwrap();

    let catalog = load_materials(&path).unwrap();
    assert_eq!(catalog.len(), 8);
    let xx = lookup(&catalog, "xx").unwrap();
    let m = measure_set(xx.xi0).unwrap();
    assert!((m.fisher - 2.0 / 3.0).abs() < 1e-15);

    let sn = lookup(&catalog, "Sn").unwrap();
    let half = measures_at_temperature(sn.xi0, sn.tc, 0.5 * sn.tc, DistributionKind::SemiInfinite)
        .unwrap();
    let xi = coherence_length(&CoherenceInput::new(sn.xi0, 0.5 * sn.tc, sn.tc)).unwrap();
    assert_eq!(half, measure_set(xi).unwrap());
}

#[test]
fn duplicate_in_file_is_reported_with_its_line() {
    let err =
        parse_materials("# header comment\nAl,13,1600,1.175\nAL,13,1600,1.175\n").unwrap_err();
    assert!(matches!(err, Error::DuplicateName { line: 3, .. }), "{err}");
}

#[test]
fn liu_identity_and_profile_agree_across_materials() {
    for m in builtin_materials() {
        let report = liu_identity(m.xi0, 1e-12).unwrap();
        assert!(report.holds(1e-6), "{}: {}", m.name, report.residual);
        assert_eq!(report.shannon, shannon(m.xi0).unwrap());
    }
}

#[test]
fn solved_profile_matches_tanh_for_a_material_scale() {
    let sol = solve_profile(83.0, 12.0 * 83.0, 2001, 1e-12).unwrap();
    assert!(verify_profile(&sol, 83.0) <= 1e-6);
}

#[test]
fn generalized_set_stitches_at_one() {
    let g = generalized_set(230.0, 1.0).unwrap();
    assert_eq!(g.tsallis, shannon(230.0).unwrap());
    assert_eq!(g.fisher_q, Some(fisher(230.0).unwrap()));
    assert!(generalized_set(230.0, 0.4).is_err());
    assert_eq!(generalized_set(230.0, 1.7).unwrap().fisher_q, None);
}

proptest! {
    #[test]
    fn scaling_laws(xi in 1e-2f64..1e5) {
        let tol = 1e-12;
        prop_assert!((fisher(xi).unwrap() * xi * xi - 2.0 / 3.0).abs() <= tol);
        prop_assert!((disequilibrium(xi).unwrap() * xi - 2f64.sqrt() / 3.0).abs() <= tol);
        let offset = 2.0 - 1.5 * 2f64.ln();
        prop_assert!((shannon(xi).unwrap() - xi.ln() - offset).abs() <= tol);
    }

    #[test]
    fn products_are_exact(xi in 1e-2f64..1e5) {
        let m = measure_set(xi).unwrap();
        prop_assert_eq!(m.complexity, m.shannon * m.disequilibrium);
        prop_assert_eq!(m.fisher_complexity, m.shannon * m.fisher);
    }

    #[test]
    fn temperature_monotonicity(a in 0.0f64..0.99, b in 0.0f64..0.99) {
        prop_assume!(a < b);
        let at = |f: f64| measures_at_temperature(38.0, 9.25, f * 9.25, DistributionKind::SemiInfinite).unwrap();
        let (lo, hi) = (at(a), at(b));
        prop_assert!(hi.shannon > lo.shannon);
        prop_assert!(hi.fisher < lo.fisher);
        prop_assert!(hi.disequilibrium < lo.disequilibrium);
    }
}

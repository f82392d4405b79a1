//! Acceptance suite: one test per shipped claim, each printing a PASS line
//! with the measured worst-case numbers. Run with `--nocapture` to see them.

use std::time::Instant;

use relspin::checks::{covariance_defect, sample_momenta, table1_report, RotationSpec};
use relspin::dirac::{
    self, anticommutator, commutator, max_abs_entry, Axis, Matrix4C, PhysicalConstants,
};
use relspin::expectation::{
    bounds_check, mixing_term, spin_moments, superposed_field, superposition_expectation,
    SuperpositionParams, ZPoint,
};
use relspin::grid::GridConfig;
use relspin::hydrogen::{self, Orientation, QuantumNumbers, RadialFunctions};
use relspin::spin_ops::SpinKind;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn consts() -> PhysicalConstants {
    PhysicalConstants::default()
}

fn report(criterion: &str, detail: String) {
    println!("ACCEPT {criterion}: PASS ({detail})");
}

#[test]
fn criterion_01_property_table_reproduction() {
    let start = Instant::now();
    let reports = table1_report(1200, 1, &consts()).unwrap();
    let elapsed = start.elapsed();

    for r in &reports {
        assert!(
            r.matches_reference(),
            "{}: sampled pattern deviates: {r:?}",
            r.kind
        );
    }
    assert_eq!(reports.len(), 6);
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "property sweep took {elapsed:?}, budget 10 s"
    );
    report(
        "01 property-table",
        format!("18/18 cells over 1200 momenta in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_02_dirac_algebra_identities() {
    let start = Instant::now();
    let identity = Matrix4C::identity();
    let beta = dirac::beta();
    let mut worst: f64 = 0.0;
    for i in Axis::ALL {
        let ai = dirac::alpha(i);
        for k in Axis::ALL {
            let target = if i == k {
                identity * Complex64::new(2.0, 0.0)
            } else {
                Matrix4C::zeros()
            };
            worst = worst.max(max_abs_entry(
                &(anticommutator(&ai, &dirac::alpha(k)) - target),
            ));
        }
        worst = worst.max(max_abs_entry(&anticommutator(&ai, &beta)));
        let sigma = dirac::sigma(i);
        worst = worst.max(max_abs_entry(&(sigma * sigma - identity)));
        worst = worst.max(max_abs_entry(&commutator(&beta, &sigma)));
    }
    worst = worst.max(max_abs_entry(&(beta * beta - identity)));
    let elapsed = start.elapsed();

    assert!(worst <= 1e-14, "identity defect {worst:e}");
    assert!(elapsed.as_secs_f64() < 1.0);
    report(
        "02 dirac-algebra",
        format!("worst identity defect {worst:.2e} in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_03_rotation_covariance() {
    let c = consts();
    let momenta = sample_momenta(100, 42, &c);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut worst: f64 = 0.0;
    for p in momenta {
        let z: f64 = rng.gen_range(-1.0..1.0);
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let s = (1.0 - z * z).sqrt();
        let rot = RotationSpec::new(
            [s * phi.cos(), s * phi.sin(), z],
            rng.gen_range(0.0..std::f64::consts::TAU),
        )
        .unwrap();
        for kind in SpinKind::ALL {
            worst = worst.max(covariance_defect(kind, &rot, p, &c).unwrap());
        }
    }
    assert!(worst <= 1e-10, "covariance defect {worst:e}");
    report(
        "03 rotation-covariance",
        format!("worst defect {worst:.2e} over 100 rotation/momentum pairs x 6 families"),
    );
}

#[test]
fn criterion_04_pryce_curve_is_flat_at_half() {
    let c = consts();
    let start = Instant::now();
    let zs: Vec<u32> = (1..=hydrogen::Z_MAX).collect();
    let rows =
        relspin::expectation::z_scan(&[SpinKind::Pryce], &zs, Axis::Z, GridConfig::default(), &c)
            .unwrap();
    let elapsed = start.elapsed();

    assert_eq!(rows.len(), 137);
    let mut worst_value: f64 = 0.0;
    let mut worst_variance: f64 = 0.0;
    for row in &rows {
        worst_value = worst_value.max((row.value - 0.5).abs());
        worst_variance = worst_variance.max(row.variance);
    }
    assert!(worst_value <= 1e-8, "Pryce value defect {worst_value:e}");
    assert!(worst_variance <= 1e-8, "Pryce variance {worst_variance:e}");
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "full scan took {elapsed:?}, budget 60 s"
    );
    report(
        "04 pryce-curve",
        format!(
            "max |value - 1/2| = {worst_value:.2e}, max variance = {worst_variance:.2e}, scan in {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_05_small_z_all_families_near_half() {
    let c = consts();
    let zs: Vec<u32> = (1..=20).collect();
    let rows =
        relspin::expectation::z_scan(&SpinKind::ALL, &zs, Axis::Z, GridConfig::default(), &c)
            .unwrap();
    assert_eq!(rows.len(), 120);
    let worst = rows
        .iter()
        .map(|r| (r.value - 0.5).abs())
        .fold(0.0, f64::max);
    assert!(worst <= 0.01, "small-Z deviation {worst}");
    report(
        "05 small-z-agreement",
        format!("max |value - 1/2| = {worst:.2e} over Z = 1..20, all families"),
    );
}

#[test]
fn criterion_06_large_z_shape() {
    let c = consts();
    let zs: Vec<u32> = (20..=136).collect();
    let kinds = [
        SpinKind::Pauli,
        SpinKind::FoldyWouthuysen,
        SpinKind::Czachor,
        SpinKind::Frenkel,
        SpinKind::Chakrabarti,
    ];
    let rows =
        relspin::expectation::z_scan(&kinds, &zs, Axis::Z, GridConfig::default(), &c).unwrap();

    let series = |kind: SpinKind| -> Vec<f64> {
        rows.iter()
            .filter(|r| r.kind == kind)
            .map(|r| r.value)
            .collect()
    };
    for kind in [
        SpinKind::Pauli,
        SpinKind::FoldyWouthuysen,
        SpinKind::Czachor,
        SpinKind::Chakrabarti,
    ] {
        let values = series(kind);
        assert_eq!(values.len(), zs.len());
        for (step, pair) in values.windows(2).enumerate() {
            assert!(
                pair[1] < pair[0],
                "{kind} not strictly decreasing at Z = {}",
                zs[step + 1]
            );
        }
    }
    let frenkel_max = series(SpinKind::Frenkel)
        .into_iter()
        .fold(f64::MIN, f64::max);
    assert!(
        frenkel_max > 0.5,
        "Frenkel never exceeded 1/2: {frenkel_max}"
    );
    report(
        "06 large-z-shape",
        format!(
            "four families strictly decreasing over Z = 20..136; Frenkel reaches {frenkel_max:.4}"
        ),
    );
}

#[test]
fn criterion_07_superposition_suite() {
    let c = consts();

    // mixing terms and antisymmetry
    let mut worst_mixing: f64 = 0.0;
    let mut worst_antisym: f64 = 0.0;
    for z in [1u32, 92, hydrogen::Z_MAX] {
        let point = ZPoint::new(z, GridConfig::default(), &c).unwrap();
        for kind in SpinKind::ALL {
            let mix = mixing_term(kind, &point.up, &point.down, Axis::Z, &c).unwrap();
            worst_mixing = worst_mixing.max(mix.re.abs());
            let up = spin_moments(kind, &point.up, Axis::Z, &c).unwrap().value;
            let down = spin_moments(kind, &point.down, Axis::Z, &c).unwrap().value;
            worst_antisym = worst_antisym.max((up + down).abs());
        }
    }
    assert!(worst_mixing <= 1e-8, "mixing term {worst_mixing:e}");
    assert!(
        worst_antisym <= 1e-8,
        "antisymmetry defect {worst_antisym:e}"
    );

    // superposition formula against direct quadrature, 50 random angle pairs
    let point = ZPoint::new(92, GridConfig::default(), &c).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7001);
    let mut worst_formula: f64 = 0.0;
    for _ in 0..50 {
        let params = SuperpositionParams::new(
            rng.gen_range(0.0..std::f64::consts::PI),
            rng.gen_range(0.0..std::f64::consts::TAU),
        );
        for kind in SpinKind::ALL {
            let formula =
                superposition_expectation(kind, params, &point.up, &point.down, Axis::Z, &c)
                    .unwrap();
            let state = superposed_field(params, &point.up, &point.down).unwrap();
            let direct = spin_moments(kind, &state, Axis::Z, &c).unwrap().value;
            worst_formula = worst_formula.max((formula - direct).abs());
        }
    }
    assert!(worst_formula <= 1e-10, "formula defect {worst_formula:e}");

    // bounds inequality, 100 random superpositions per family
    for kind in SpinKind::ALL {
        let outcome =
            bounds_check(kind, 92, &point.up, &point.down, Axis::Z, 100, 9000, &c).unwrap();
        assert!(
            outcome.holds,
            "{kind}: bounds violated by {:e}",
            outcome.max_violation
        );
    }

    report(
        "07 superposition-suite",
        format!(
            "mixing {worst_mixing:.2e}, antisymmetry {worst_antisym:.2e}, formula-vs-direct {worst_formula:.2e}, bounds hold for 100 samples x 6 families"
        ),
    );
}

#[test]
fn criterion_08_hydrogen_self_consistency() {
    let c = consts();
    let rest = c.rest_energy();

    // closed-form ground energy across the whole range
    let q = QuantumNumbers::ground(0.5);
    let mut worst_energy: f64 = 0.0;
    for z in 1..=hydrogen::Z_MAX {
        let e = hydrogen::sommerfeld_energy(&q, z, &c).unwrap();
        let gamma = hydrogen::gamma_param(z, &c).unwrap();
        worst_energy = worst_energy.max((e - rest * gamma).abs() / rest);
    }
    assert!(worst_energy <= 1e-12);

    // momentum-grid norm against the position normalization
    let mut worst_norm: f64 = 0.0;
    for z in [1u32, 20, 60, 92, 120, hydrogen::Z_MAX] {
        let point = ZPoint::new(z, GridConfig::default(), &c).unwrap();
        worst_norm = worst_norm.max((point.up.norm() - 1.0).abs());
    }
    assert!(worst_norm <= 1e-8, "norm defect {worst_norm:e}");

    // <H0> + <-Z/r> recovers the bound energy
    let mut worst_cross: f64 = 0.0;
    for z in [1u32, 60, 120] {
        let radial = RadialFunctions::for_ground_state(z, &c).unwrap();
        let point = ZPoint::new(z, GridConfig::default(), &c).unwrap();
        let h0 = relspin::expectation::matrix_expectation(&point.up, |p| {
            Ok(relspin::spin_ops::h0_matrix(p, &c))
        })
        .unwrap();
        let coulomb = -(z as f64) * radial.mean_inverse_r(48).unwrap();
        worst_cross =
            worst_cross.max((h0.re + coulomb - point.spec_up.energy).abs() / point.spec_up.energy);
    }
    assert!(worst_cross <= 1e-6, "energy cross-check {worst_cross:e}");

    report(
        "08 hydrogen-consistency",
        format!(
            "energy vs closed form {worst_energy:.2e}, norm defect {worst_norm:.2e}, energy cross-check {worst_cross:.2e}"
        ),
    );
}

#[test]
fn criterion_09_grid_refinement_stability() {
    let c = consts();
    let coarse_config = GridConfig::default();
    let fine_config = GridConfig {
        radial_order: 2 * coarse_config.radial_order,
        angular_order: 2 * coarse_config.angular_order,
    };
    let mut worst: f64 = 0.0;
    for z in [1u32, 92, hydrogen::Z_MAX] {
        let coarse = ZPoint::new(z, coarse_config, &c).unwrap();
        let fine = ZPoint::new(z, fine_config, &c).unwrap();
        for kind in SpinKind::ALL {
            let a = coarse.expectation(kind, Orientation::Up, Axis::Z).unwrap();
            let b = fine.expectation(kind, Orientation::Up, Axis::Z).unwrap();
            worst = worst.max((a.value - b.value).abs());
        }
    }
    assert!(worst < 1e-6, "refinement shift {worst:e}");
    report(
        "09 grid-refinement",
        format!("doubling both orders shifts values by at most {worst:.2e}"),
    );
}

#[test]
fn criterion_10_scan_output_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_relspin");
    let run = || {
        std::process::Command::new(exe)
            .args([
                "scan", "--kinds", "all", "--z-min", "1", "--z-max", "12", "--seed", "5",
            ])
            .output()
            .expect("scan run")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert!(second.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "identical configurations must give byte-identical output"
    );
    report(
        "10 determinism",
        format!(
            "two scan runs produced identical {} bytes",
            first.stdout.len()
        ),
    );
}

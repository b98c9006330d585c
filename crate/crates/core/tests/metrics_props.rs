mod common;

use common::*;
use qslwigner_core::metrics::{
    nonclassical_volume, nonclassical_volume_estimated, wasserstein1, wasserstein1_estimated,
};
use qslwigner_core::states::{build_state, StateSpec};
use qslwigner_core::wigner::{wigner_single, wigner_two, FieldDomain, WignerField};
use qslwigner_core::{DensityMatrix, SphereGrid};

fn excited() -> DensityMatrix {
    build_state(&"0".parse::<StateSpec>().unwrap()).unwrap()
}

fn ground() -> DensityMatrix {
    build_state(&"1".parse::<StateSpec>().unwrap()).unwrap()
}

/// Independent oracle: ∫|W| for a field depending on cos θ only, by
/// composite Simpson on each side of the nodal point.
fn axial_abs_integral(f: impl Fn(f64) -> f64, node: f64) -> f64 {
    let simpson = |a: f64, b: f64| {
        let n = 20_000;
        let h = (b - a) / n as f64;
        let mut s = f(a).abs() + f(b).abs();
        for i in 1..n {
            let x = a + i as f64 * h;
            s += f(x).abs() * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    };
    2.0 * std::f64::consts::PI * (simpson(-1.0, node) + simpson(node, 1.0))
}

#[test]
fn excited_state_volume() {
    let s3 = 3f64.sqrt();
    let oracle = axial_abs_integral(|c| (1.0 + s3 * c) / (4.0 * std::f64::consts::PI), -1.0 / s3) - 1.0;
    assert!((oracle - (2.0 / s3 - 1.0)).abs() < 1e-12);
    let fine = SphereGrid::new(1024, 16).unwrap();
    let delta = nonclassical_volume(&wigner_single(&excited(), &fine).unwrap()).unwrap();
    assert!((delta.value - oracle).abs() < 1e-5, "{}", delta.value);
    // the default grid is within its own error estimate's order of magnitude
    let est = nonclassical_volume_estimated(&excited(), &SphereGrid::new(64, 64).unwrap()).unwrap();
    let err = est.estimated_quadrature_error.unwrap();
    assert!((est.value - oracle).abs() < 4.0 * err && err < 1e-3);
}

#[test]
fn mixed_state_has_no_volume() {
    let g = SphereGrid::new(64, 64).unwrap();
    let d = nonclassical_volume(&wigner_single(&DensityMatrix::maximally_mixed(2).unwrap(), &g).unwrap()).unwrap();
    assert!(d.value <= 1e-12);
}

#[test]
fn one_excitation_pair_volume() {
    let g = SphereGrid::new(256, 8).unwrap();
    let rho = build_state(&StateSpec::Basis(0, 1)).unwrap();
    let d = nonclassical_volume(&wigner_two(&rho, &g, &g).unwrap()).unwrap();
    assert!((d.value - 1.0 / 3.0).abs() < 1e-4, "{}", d.value);
}

#[test]
fn opposite_poles_distance() {
    let s3 = 3f64.sqrt();
    let oracle = axial_abs_integral(|c| 2.0 * s3 * c / (4.0 * std::f64::consts::PI), 0.0);
    assert!((oracle - s3).abs() < 1e-12);
    let g = SphereGrid::new(2048, 8).unwrap();
    let d = wasserstein1(&wigner_single(&excited(), &g).unwrap(), &wigner_single(&ground(), &g).unwrap()).unwrap();
    assert!((d.value - oracle).abs() < 1e-6, "{}", d.value);
    let est = wasserstein1_estimated(&excited(), &ground(), &SphereGrid::new(64, 64).unwrap()).unwrap();
    assert!(est.estimated_quadrature_error.unwrap() > 0.0);
}

#[test]
fn distance_is_symmetric_and_bounded() {
    let mut r = rng(20);
    let g = SphereGrid::new(64, 64).unwrap();
    for _ in 0..50 {
        let a = wigner_single(&random_state(2, &mut r), &g).unwrap();
        let b = wigner_single(&random_state(2, &mut r), &g).unwrap();
        let ab = wasserstein1(&a, &b).unwrap().value;
        let ba = wasserstein1(&b, &a).unwrap().value;
        assert!((ab - ba).abs() <= 1e-14);
        assert!(wasserstein1(&a, &a).unwrap().value == 0.0);
        let da = nonclassical_volume(&a).unwrap().value;
        let db = nonclassical_volume(&b).unwrap().value;
        assert!(ab <= (1.0 + da) + (1.0 + db) + 1e-12);
    }
}

#[test]
fn triangle_inequality() {
    let mut r = rng(21);
    let g = SphereGrid::new(32, 32).unwrap();
    for _ in 0..50 {
        let f: Vec<WignerField> = (0..3).map(|_| wigner_single(&random_state(2, &mut r), &g).unwrap()).collect();
        let d = |i: usize, j: usize| wasserstein1(&f[i], &f[j]).unwrap().value;
        assert!(d(0, 2) <= d(0, 1) + d(1, 2) + 1e-10);
    }
}

#[test]
fn volume_is_rotation_invariant() {
    let mut r = rng(22);
    let g = SphereGrid::new(64, 64).unwrap();
    for _ in 0..30 {
        let rho = random_pure(2, &mut r);
        let u = random_unitary2(&mut r);
        let a = nonclassical_volume(&wigner_single(&rho, &g).unwrap()).unwrap().value;
        let b = nonclassical_volume(&wigner_single(&conjugate(&u, &rho), &g).unwrap()).unwrap().value;
        assert!((a - b).abs() < 2e-3, "{a} vs {b}");
    }
}

#[test]
fn depolarization_removes_volume_monotonically() {
    let mut r = rng(23);
    let g = SphereGrid::new(64, 64).unwrap();
    let half_id = DensityMatrix::maximally_mixed(2).unwrap();
    for _ in 0..10 {
        let rho = random_pure(2, &mut r);
        let mut last = f64::INFINITY;
        for i in 0..=20 {
            let s = i as f64 / 20.0;
            let m = rho.matrix().scale_real(1.0 - s) + half_id.matrix().scale_real(s);
            let d = nonclassical_volume(&wigner_single(&DensityMatrix::new(m).unwrap(), &g).unwrap()).unwrap().value;
            assert!(d <= last + 1e-12);
            last = d;
        }
        assert!(last <= 1e-12);
    }
}

#[test]
fn mismatched_or_unnormalized_fields_rejected() {
    let a = wigner_single(&excited(), &SphereGrid::new(16, 16).unwrap()).unwrap();
    let b = wigner_single(&excited(), &SphereGrid::new(16, 32).unwrap()).unwrap();
    assert!(wasserstein1(&a, &b).is_err());
    let doubled = WignerField::from_values(
        FieldDomain::Sphere(SphereGrid::new(16, 16).unwrap()),
        a.values().iter().map(|v| 2.0 * v).collect(),
    )
    .unwrap();
    assert!(nonclassical_volume(&doubled).is_err());
}

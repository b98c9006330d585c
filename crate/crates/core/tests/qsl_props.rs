mod common;

use common::*;
use qslwigner_core::phase_covariant::{
    decoherence_rates, evolve_phase_covariant, phase_covariant_derivative, PhaseCovariantParams,
};
use qslwigner_core::qsl::{qsl_along, qsl_time, qsl_velocity, wigner_time_derivative, PNormSpec};
use qslwigner_core::states::{build_state, StateSpec};
use qslwigner_core::wigner::{wigner_transform, FieldDomain};
use qslwigner_core::{ComplexMatrix, DensityMatrix, Error, SphereGrid};
use rand::Rng;

fn sphere(n_theta: usize, n_phi: usize) -> FieldDomain {
    FieldDomain::Sphere(SphereGrid::new(n_theta, n_phi).unwrap())
}

fn plus() -> DensityMatrix {
    build_state(&"+".parse::<StateSpec>().unwrap()).unwrap()
}

#[test]
fn pure_dephasing_derivative_profile() {
    // κ = 0 switches off amplitude damping, leaving λ̇_x only
    let p = PhaseCovariantParams::new(0.0, 1.0, 0.7, 1.0).unwrap();
    let t = 0.8;
    let rate = decoherence_rates(t, &p).unwrap();
    assert_eq!(rate.d_lambda_z, 0.0);
    let dom = sphere(65, 64);
    let wdot = wigner_time_derivative(&phase_covariant_derivative(&plus(), t, &p).unwrap(), &dom).unwrap();
    let pref = 3f64.sqrt() / (4.0 * std::f64::consts::PI);
    for k in 0..wdot.len() {
        let n = wdot.node(k);
        let want = pref * rate.d_lambda_x * n.theta[0].sin() * n.phi[0].cos();
        assert!((wdot.values()[k] - want).abs() < 1e-14);
    }
    let sup = qsl_velocity(&wdot, &PNormSpec::new(vec![], true).unwrap()).unwrap();
    assert!((sup.v - pref * rate.d_lambda_x.abs()).abs() < 1e-15);
    assert!(sup.argmin_p.is_infinite());

    let fine = sphere(512, 512);
    let wdot = wigner_time_derivative(&phase_covariant_derivative(&plus(), t, &p).unwrap(), &fine).unwrap();
    let l1 = qsl_velocity(&wdot, &PNormSpec::bound()).unwrap();
    let want = 0.5 * 3f64.sqrt() * rate.d_lambda_x.abs();
    // sinθ is not polynomial in cosθ, so Gauss–Legendre converges only algebraically here
    assert!((l1.v - want).abs() < 1e-4 * want, "{} vs {want}", l1.v);
}

#[test]
fn derivative_field_has_zero_mean() {
    let mut r = rng(40);
    let dom = sphere(32, 32);
    for _ in 0..20 {
        let p = PhaseCovariantParams::new(
            r.gen_range(0.0..2.0),
            r.gen_range(0.01..3.0),
            r.gen_range(0.0..2.0),
            r.gen_range(0.01..3.0),
        )
        .unwrap();
        let rho0 = random_state(2, &mut r);
        let t = r.gen_range(0.0..10.0);
        let wdot = wigner_time_derivative(&phase_covariant_derivative(&rho0, t, &p).unwrap(), &dom).unwrap();
        assert!(wdot.integrate().abs() < 1e-10);
    }
}

#[test]
fn exact_derivative_matches_central_differences() {
    let mut r = rng(41);
    let dom = sphere(16, 16);
    for _ in 0..10 {
        let p = PhaseCovariantParams::new(
            r.gen_range(0.2..1.5),
            r.gen_range(0.2..1.5),
            r.gen_range(0.2..1.5),
            r.gen_range(0.2..1.5),
        )
        .unwrap();
        let rho0 = random_state(2, &mut r);
        let t = r.gen_range(0.5..3.0);
        let exact = wigner_time_derivative(&phase_covariant_derivative(&rho0, t, &p).unwrap(), &dom).unwrap();
        let w = |s: f64| wigner_transform(evolve_phase_covariant(&rho0, s, &p).unwrap().matrix(), &dom).unwrap();
        let fd_err = |h: f64| {
            let fd = w(t + h).combine(0.5 / h, &w(t - h), -0.5 / h).unwrap();
            fd.values().iter().zip(exact.values()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        };
        let (e1, e2) = (fd_err(1e-3), fd_err(5e-4));
        assert!(e1 < 1e-5, "{e1}");
        let ratio = e1 / e2;
        assert!((3.5..4.5).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn l1_bound_holds_on_random_runs() {
    let mut r = rng(42);
    let dom = sphere(32, 32);
    for _ in 0..20 {
        let p = PhaseCovariantParams::new(
            r.gen_range(0.0..2.0),
            r.gen_range(0.01..3.0),
            r.gen_range(0.0..2.0),
            r.gen_range(0.01..3.0),
        )
        .unwrap();
        let rho0 = random_state(2, &mut r);
        let tau = r.gen_range(0.5..10.0);
        let times: Vec<f64> = (0..400).map(|i| tau * i as f64 / 399.0).collect();
        let states: Vec<ComplexMatrix> =
            times.iter().map(|&t| *evolve_phase_covariant(&rho0, t, &p).unwrap().matrix()).collect();
        let derivs: Vec<ComplexMatrix> =
            times.iter().map(|&t| phase_covariant_derivative(&rho0, t, &p).unwrap()).collect();
        match qsl_along(&times, &states, &derivs, &dom, &PNormSpec::bound()) {
            Ok(res) => assert!(res.summary.tau_qsl <= tau + 1e-9, "{} > {tau}", res.summary.tau_qsl),
            Err(Error::StationaryTrajectory) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn straight_line_trajectory_saturates_bound() {
    // ρ(t) = ρ₀ + tA moves W along a fixed direction at constant speed
    let rho0 = DensityMatrix::maximally_mixed(2).unwrap();
    let a = ComplexMatrix::diagonal(&[0.1, -0.1]).unwrap();
    let dom = sphere(64, 8);
    let times = [0.0, 2.0];
    let states = [*rho0.matrix(), *rho0.matrix() + a.scale_real(2.0)];
    let res = qsl_along(&times, &states, &[a, a], &dom, &PNormSpec::bound()).unwrap();
    assert!((res.summary.tau_qsl - 2.0).abs() < 1e-12);
}

#[test]
fn stationary_trajectory_is_reported() {
    let rho = DensityMatrix::maximally_mixed(2).unwrap();
    let dom = sphere(8, 8);
    let w = wigner_transform(rho.matrix(), &dom).unwrap();
    assert!(matches!(qsl_time(&w, &w, &[0.0, 1.0], &[0.0, 0.0]), Err(Error::StationaryTrajectory)));
}

#[test]
fn velocity_set_semantics() {
    let mut r = rng(43);
    let dom = sphere(16, 16);
    let p = PhaseCovariantParams::new(1.0, 0.5, 1.0, 0.5).unwrap();
    for _ in 0..10 {
        let rho0 = random_state(2, &mut r);
        let wdot = wigner_time_derivative(&phase_covariant_derivative(&rho0, 1.3, &p).unwrap(), &dom).unwrap();
        let a = qsl_velocity(&wdot, &PNormSpec::new(vec![8.0, 1.0, 2.0], false).unwrap()).unwrap();
        let b = qsl_velocity(&wdot, &PNormSpec::new(vec![2.0, 8.0, 1.0, 2.0], false).unwrap()).unwrap();
        assert_eq!(a, b);
        let mut last = f64::INFINITY;
        let mut grid = vec![];
        for p_val in [1.0, 2.0, 4.0, 8.0] {
            grid.push(p_val);
            let v = qsl_velocity(&wdot, &PNormSpec::new(grid.clone(), false).unwrap()).unwrap().v;
            assert!(v <= last);
            last = v;
        }
        let with_sup = qsl_velocity(&wdot, &PNormSpec::paper_min()).unwrap().v;
        assert!(with_sup <= last);
    }
}

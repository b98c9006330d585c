mod common;

use common::*;
use qslwigner_core::discord::{
    conditional_entropy, conditional_entropy_min_over, quantum_discord, quantum_discord_with, DiscordOptions,
    MeasurementDirection,
};
use qslwigner_core::states::{build_state, werner, StateSpec};
use qslwigner_core::{tensor_product, DensityMatrix, Subsystem};
use rand::Rng;

fn random_directions(n: usize, seed: u64) -> Vec<MeasurementDirection> {
    let mut r = rng(seed);
    (0..n)
        .map(|_| {
            let c: f64 = r.gen_range(-1.0..1.0);
            MeasurementDirection::new(c.acos(), r.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}

#[test]
fn product_states_carry_no_discord() {
    let mut r = rng(60);
    for _ in 0..20 {
        let (a, _, ab) = random_product(&mut r);
        assert!(quantum_discord(&ab).unwrap().discord.abs() <= 1e-9);
        let n = MeasurementDirection::new(r.gen_range(0.0..3.0), r.gen_range(0.0..6.0));
        assert!((conditional_entropy(&ab, n).unwrap() - a.von_neumann_entropy()).abs() < 1e-10);
    }
}

#[test]
fn bell_state_reference_values() {
    let bell = build_state(&StateSpec::Bell).unwrap();
    let d = quantum_discord(&bell).unwrap();
    assert!((d.discord - 1.0).abs() <= 1e-6);
    for n in random_directions(20, 61) {
        assert!(conditional_entropy(&bell, n).unwrap().abs() < 1e-10);
    }
    let mixed = DensityMatrix::maximally_mixed(4).unwrap();
    assert!((conditional_entropy(&mixed, MeasurementDirection::new(1.0, 2.0)).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn werner_sweep_matches_brute_force() {
    let dirs = random_directions(10_000, 62);
    for i in 1..=9 {
        let p = i as f64 / 10.0;
        let rho = werner(p).unwrap();
        let oracle = rho.partial_trace(Subsystem::B).unwrap().von_neumann_entropy() - rho.von_neumann_entropy()
            + conditional_entropy_min_over(&rho, &dirs).unwrap();
        let d = quantum_discord(&rho).unwrap().discord;
        assert!((d - oracle).abs() <= 1e-4, "P={p}: {d} vs {oracle}");
    }
}

#[test]
fn werner_discord_is_monotone() {
    let mut last = -1.0;
    for i in 0..20 {
        let d = quantum_discord(&werner(i as f64 / 19.0).unwrap()).unwrap().discord;
        assert!(d >= last);
        last = d;
    }
}

#[test]
fn random_states_have_nonnegative_discord() {
    let mut r = rng(63);
    for _ in 0..200 {
        let rho = random_state(4, &mut r);
        let res = quantum_discord(&rho).unwrap();
        assert!(res.discord >= 0.0);
        let raw = rho.partial_trace(Subsystem::B).unwrap().von_neumann_entropy() - rho.von_neumann_entropy()
            + res.conditional_entropy;
        assert!(raw >= -1e-9);
        assert!(res.conditional_entropy <= res.coarse_conditional_entropy);
        assert!(res.discord <= 1.0 + 1e-9);
    }
}

#[test]
fn local_unitaries_leave_discord_unchanged() {
    let mut r = rng(64);
    for _ in 0..20 {
        let rho = random_state(4, &mut r);
        let u = tensor_product(&random_unitary2(&mut r), &random_unitary2(&mut r)).unwrap();
        let moved = conjugate(&u, &rho);
        let (a, b) = (quantum_discord(&rho).unwrap().discord, quantum_discord(&moved).unwrap().discord);
        assert!((a - b).abs() <= 1e-6, "{a} vs {b}");
    }
}

#[test]
fn measuring_either_side_of_a_symmetric_state_agrees() {
    let opts_a = DiscordOptions { measured: Subsystem::A, ..Default::default() };
    for p in [0.2, 0.6, 1.0] {
        let rho = werner(p).unwrap();
        let b = quantum_discord(&rho).unwrap().discord;
        let a = quantum_discord_with(&rho, &opts_a).unwrap().discord;
        assert!((a - b).abs() < 1e-9);
    }
    // a classical-quantum state: zero when measuring the classical side only
    let plus = build_state(&"+".parse::<StateSpec>().unwrap()).unwrap();
    let zero = build_state(&"0".parse::<StateSpec>().unwrap()).unwrap();
    let one = build_state(&"1".parse::<StateSpec>().unwrap()).unwrap();
    let cq = DensityMatrix::new(
        tensor_product(plus.matrix(), zero.matrix()).unwrap().scale_real(0.5)
            + tensor_product(zero.matrix(), one.matrix()).unwrap().scale_real(0.5),
    )
    .unwrap();
    let measured_b = quantum_discord(&cq).unwrap().discord;
    let measured_a = quantum_discord_with(&cq, &opts_a).unwrap().discord;
    assert!(measured_b <= 1e-9, "{measured_b}");
    assert!(measured_a > 1e-3, "{measured_a}");
}

#![allow(dead_code)]

use qslwigner_core::{tensor_product, ComplexMatrix, DensityMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub fn ginibre(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let entries: Vec<C64> = (0..dim * dim).map(|_| C64::new(gaussian(rng), gaussian(rng))).collect();
    ComplexMatrix::from_rows(dim, &entries).unwrap()
}

/// Haar-ish random pure state vector.
pub fn random_vector(dim: usize, rng: &mut impl Rng) -> Vec<C64> {
    let v: Vec<C64> = (0..dim).map(|_| C64::new(gaussian(rng), gaussian(rng))).collect();
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / n).collect()
}

pub fn random_pure(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    DensityMatrix::pure(&random_vector(dim, rng)).unwrap()
}

/// Full-rank random mixed state `GG†/Tr(GG†)`.
pub fn random_mixed(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    let g = ginibre(dim, rng);
    let m = g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr).hermitian_part()).unwrap()
}

/// Either a pure or a mixed state, chosen at random.
pub fn random_state(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    if rng.gen_bool(0.3) {
        random_pure(dim, rng)
    } else {
        random_mixed(dim, rng)
    }
}

pub fn random_product(rng: &mut impl Rng) -> (DensityMatrix, DensityMatrix, DensityMatrix) {
    let a = random_state(2, rng);
    let b = random_state(2, rng);
    let ab = DensityMatrix::new(tensor_product(a.matrix(), b.matrix()).unwrap()).unwrap();
    (a, b, ab)
}

/// Random single-qubit unitary from Euler angles and a global phase.
pub fn random_unitary2(rng: &mut impl Rng) -> ComplexMatrix {
    let (a, b, c, g): (f64, f64, f64, f64) = (
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::PI),
        rng.gen_range(0.0..std::f64::consts::TAU),
        rng.gen_range(0.0..std::f64::consts::TAU),
    );
    let e = |x: f64| C64::from_polar(1.0, x);
    let (cb, sb) = ((b / 2.0).cos(), (b / 2.0).sin());
    ComplexMatrix::from_rows(
        2,
        &[e(g - (a + c) / 2.0) * cb, -e(g - (a - c) / 2.0) * sb, e(g + (a - c) / 2.0) * sb, e(g + (a + c) / 2.0) * cb],
    )
    .unwrap()
}

pub fn conjugate(u: &ComplexMatrix, rho: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::new((*u * *rho.matrix() * u.adjoint()).hermitian_part()).unwrap()
}

pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ginibre(dim, rng).hermitian_part()
}

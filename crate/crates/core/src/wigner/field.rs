use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::grid::{GridSpec, SphereGrid};
use super::harmonics::spherical_harmonic;
use super::multipole::multipole_operator;
use super::threej::HalfInt;
use crate::error::{Error, Result};
use crate::linalg::{tensor_product, ComplexMatrix, DensityMatrix, C64};

/// `(K, Q)` pairs of the qubit multipole basis, in coefficient order.
pub const SPIN_HALF_MULTIPOLES: [(u32, i32); 4] = [(0, 0), (1, -1), (1, 0), (1, 1)];

/// `√((2j+1)/4π)` for `j = 1/2`.
fn single_prefactor() -> f64 {
    (2.0 / (4.0 * PI)).sqrt()
}

/// `(2j+1)/4π` for `j = 1/2`.
fn pair_prefactor() -> f64 {
    2.0 / (4.0 * PI)
}

fn spin_half_basis() -> [ComplexMatrix; 4] {
    SPIN_HALF_MULTIPOLES.map(|(k, q)| multipole_operator(HalfInt::HALF, k, q).expect("valid spin-1/2 multipole"))
}

/// `a_KQ = Tr(T†_KQ A)` for a 2×2 operator, ordered as [`SPIN_HALF_MULTIPOLES`].
pub fn multipole_coefficients_single(op: &ComplexMatrix) -> Result<[C64; 4]> {
    if op.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: op.dim() });
    }
    Ok(spin_half_basis().map(|t| (t.adjoint() * *op).trace()))
}

/// `a_{K₁Q₁K₂Q₂} = Tr(A · T†_K₁Q₁ ⊗ T†_K₂Q₂)` for a 4×4 operator.
pub fn multipole_coefficients_two(op: &ComplexMatrix) -> Result<[[C64; 4]; 4]> {
    if op.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: op.dim() });
    }
    let basis = spin_half_basis();
    let mut out = [[C64::new(0.0, 0.0); 4]; 4];
    for (a, ta) in basis.iter().enumerate() {
        for (b, tb) in basis.iter().enumerate() {
            let t = tensor_product(&ta.adjoint(), &tb.adjoint())?;
            out[a][b] = (*op * t).trace();
        }
    }
    Ok(out)
}

fn harmonics_at(theta: f64, phi: f64) -> [C64; 4] {
    SPIN_HALF_MULTIPOLES.map(|(k, q)| spherical_harmonic(k, q, theta, phi))
}

fn harmonic_table(grid: &SphereGrid) -> Vec<[C64; 4]> {
    (0..grid.len())
        .map(|k| {
            let (t, p, _) = grid.node(k);
            harmonics_at(t, p)
        })
        .collect()
}

/// Where a field lives: one sphere, or the product of two.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldDomain {
    Sphere(SphereGrid),
    SpherePair(SphereGrid, SphereGrid),
}

impl FieldDomain {
    pub fn arity(&self) -> usize {
        match self {
            FieldDomain::Sphere(_) => 1,
            FieldDomain::SpherePair(..) => 2,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            FieldDomain::Sphere(g) => g.len(),
            FieldDomain::SpherePair(a, b) => a.len() * b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn specs(&self) -> (GridSpec, Option<GridSpec>) {
        match self {
            FieldDomain::Sphere(g) => (g.spec(), None),
            FieldDomain::SpherePair(a, b) => (a.spec(), Some(b.spec())),
        }
    }

    /// Domain with every grid doubled in resolution.
    pub fn doubled(&self) -> Self {
        match self {
            FieldDomain::Sphere(g) => FieldDomain::Sphere(g.doubled()),
            FieldDomain::SpherePair(a, b) => FieldDomain::SpherePair(a.doubled(), b.doubled()),
        }
    }
}

/// Coordinates and weight of one quadrature node of a field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldNode {
    pub theta: [f64; 2],
    pub phi: [f64; 2],
    pub weight: f64,
}

/// A real quasiprobability density sampled on quadrature nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerField {
    domain: FieldDomain,
    values: Vec<f64>,
    imag_residual: f64,
}

impl WignerField {
    /// Wraps externally computed samples; `values` must match the domain size.
    pub fn from_values(domain: FieldDomain, values: Vec<f64>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(Error::DimensionMismatch { expected: domain.len(), found: values.len() });
        }
        Ok(Self { domain, values, imag_residual: 0.0 })
    }

    pub fn domain(&self) -> &FieldDomain {
        &self.domain
    }

    pub fn arity(&self) -> usize {
        self.domain.arity()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest imaginary part discarded when the field was made real.
    pub fn imag_residual(&self) -> f64 {
        self.imag_residual
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn grid_spec(&self) -> GridSpec {
        self.domain.specs().0
    }

    pub fn node(&self, k: usize) -> FieldNode {
        match &self.domain {
            FieldDomain::Sphere(g) => {
                let (t, p, w) = g.node(k);
                FieldNode { theta: [t, 0.0], phi: [p, 0.0], weight: w }
            }
            FieldDomain::SpherePair(a, b) => {
                let (ta, pa, wa) = a.node(k / b.len());
                let (tb, pb, wb) = b.node(k % b.len());
                FieldNode { theta: [ta, tb], phi: [pa, pb], weight: wa * wb }
            }
        }
    }

    /// `Σ_k w_k f(v_k)`, summed sequentially in node order.
    pub fn weighted_sum(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut total = 0.0;
        self.for_each_weight(|k, w| total += w * f(self.values[k]));
        total
    }

    /// `Σ_k w_k f(a_k, b_k)` over two fields on the same domain.
    pub fn zip_weighted_sum(&self, other: &WignerField, mut f: impl FnMut(f64, f64) -> f64) -> Result<f64> {
        if !self.same_domain(other) {
            return Err(Error::InvalidArgument("fields live on different grids"));
        }
        let mut total = 0.0;
        self.for_each_weight(|k, w| total += w * f(self.values[k], other.values[k]));
        Ok(total)
    }

    /// Quadrature integral `∫ W dΩ`.
    pub fn integrate(&self) -> f64 {
        self.weighted_sum(|v| v)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn same_domain(&self, other: &WignerField) -> bool {
        self.domain.specs() == other.domain.specs()
    }

    /// Pointwise linear combination `α·self + β·other`.
    pub fn combine(&self, alpha: f64, other: &WignerField, beta: f64) -> Result<WignerField> {
        if !self.same_domain(other) {
            return Err(Error::InvalidArgument("fields live on different grids"));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| alpha * a + beta * b).collect();
        Ok(WignerField {
            domain: self.domain.clone(),
            values,
            imag_residual: self.imag_residual.max(other.imag_residual),
        })
    }

    fn for_each_weight(&self, mut f: impl FnMut(usize, f64)) {
        match &self.domain {
            FieldDomain::Sphere(g) => {
                for (k, w) in g.weights().into_iter().enumerate() {
                    f(k, w);
                }
            }
            FieldDomain::SpherePair(a, b) => {
                let wb = b.weights();
                for (ia, wa) in a.weights().into_iter().enumerate() {
                    let base = ia * wb.len();
                    for (ib, w) in wb.iter().enumerate() {
                        f(base + ib, wa * w);
                    }
                }
            }
        }
    }
}

/// Wigner transform of any 2×2 or 4×4 operator on a matching domain.
///
/// The map is linear, so it serves both states and their time derivatives.
pub fn wigner_transform(op: &ComplexMatrix, domain: &FieldDomain) -> Result<WignerField> {
    match (op.dim(), domain) {
        (2, FieldDomain::Sphere(grid)) => {
            let c = multipole_coefficients_single(op)?;
            let pref = single_prefactor();
            let mut residual = 0.0f64;
            let values = harmonic_table(grid)
                .iter()
                .map(|y| {
                    let w: C64 = c.iter().zip(y).map(|(c, y)| c * y).sum::<C64>() * pref;
                    residual = residual.max(w.im.abs());
                    w.re
                })
                .collect();
            Ok(WignerField { domain: domain.clone(), values, imag_residual: residual })
        }
        (4, FieldDomain::SpherePair(ga, gb)) => {
            let c = multipole_coefficients_two(op)?;
            let pref = pair_prefactor();
            let ya = harmonic_table(ga);
            let yb = harmonic_table(gb);
            let mut values = Vec::with_capacity(ya.len() * yb.len());
            let mut residual = 0.0f64;
            for y1 in &ya {
                // u_b = pref · Σ_a c_ab Y_a(Ω₁)
                let mut u = [C64::new(0.0, 0.0); 4];
                for (a, ya_val) in y1.iter().enumerate() {
                    for (b, ub) in u.iter_mut().enumerate() {
                        *ub += c[a][b] * ya_val;
                    }
                }
                u.iter_mut().for_each(|z| *z *= pref);
                for y2 in &yb {
                    let w = u[0] * y2[0] + u[1] * y2[1] + u[2] * y2[2] + u[3] * y2[3];
                    residual = residual.max(w.im.abs());
                    values.push(w.re);
                }
            }
            Ok(WignerField { domain: domain.clone(), values, imag_residual: residual })
        }
        (2, _) | (4, _) => Err(Error::InvalidArgument("operator dimension does not match grid arity")),
        (d, _) => Err(Error::DimensionMismatch { expected: 2, found: d }),
    }
}

/// Wigner field of a qubit state on one sphere.
pub fn wigner_single(rho: &DensityMatrix, grid: &SphereGrid) -> Result<WignerField> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: rho.dim() });
    }
    wigner_transform(rho.matrix(), &FieldDomain::Sphere(grid.clone()))
}

/// Wigner field of a two-qubit state on the product of two spheres.
pub fn wigner_two(rho: &DensityMatrix, grid_a: &SphereGrid, grid_b: &SphereGrid) -> Result<WignerField> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    wigner_transform(rho.matrix(), &FieldDomain::SpherePair(grid_a.clone(), grid_b.clone()))
}

/// `W(θ, φ)` of a 2×2 operator at a single point.
pub fn wigner_single_at(op: &ComplexMatrix, theta: f64, phi: f64) -> Result<f64> {
    let c = multipole_coefficients_single(op)?;
    let y = harmonics_at(theta, phi);
    let w: C64 = c.iter().zip(&y).map(|(c, y)| c * y).sum();
    Ok(w.re * single_prefactor())
}

/// `W(θ₁, φ₁, θ₂, φ₂)` of a 4×4 operator at a single point.
pub fn wigner_two_at(op: &ComplexMatrix, theta1: f64, phi1: f64, theta2: f64, phi2: f64) -> Result<f64> {
    let c = multipole_coefficients_two(op)?;
    let y1 = harmonics_at(theta1, phi1);
    let y2 = harmonics_at(theta2, phi2);
    let mut w = C64::new(0.0, 0.0);
    for a in 0..4 {
        for b in 0..4 {
            w += c[a][b] * y1[a] * y2[b];
        }
    }
    Ok(w.re * pair_prefactor())
}

/// Anything that can be sampled as a Wigner field on a given sphere grid.
/// Two-qubit sources use the same grid on both spheres.
pub trait WignerSource {
    fn wigner_field(&self, grid: &SphereGrid) -> Result<WignerField>;
}

impl WignerSource for DensityMatrix {
    fn wigner_field(&self, grid: &SphereGrid) -> Result<WignerField> {
        self.matrix().wigner_field(grid)
    }
}

impl WignerSource for ComplexMatrix {
    fn wigner_field(&self, grid: &SphereGrid) -> Result<WignerField> {
        let domain = match self.dim() {
            2 => FieldDomain::Sphere(grid.clone()),
            _ => FieldDomain::SpherePair(grid.clone(), grid.clone()),
        };
        wigner_transform(self, &domain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pauli, Axis};

    const FOUR_PI: f64 = 4.0 * PI;

    fn grid() -> SphereGrid {
        SphereGrid::new(16, 16).unwrap()
    }

    #[test]
    fn maximally_mixed_is_uniform() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let f = wigner_single(&rho, &grid()).unwrap();
        for v in f.values() {
            assert!((v - 1.0 / FOUR_PI).abs() < 1e-15);
        }
        assert!((f.integrate() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn excited_state_profile() {
        let rho = DensityMatrix::from_bloch([0.0, 0.0, 1.0]).unwrap();
        let w = wigner_single_at(rho.matrix(), PI, 0.0).unwrap();
        assert!((w - (1.0 - 3f64.sqrt()) / FOUR_PI).abs() < 1e-15);
        assert!((w + 0.058_254_75).abs() < 1e-7);
        let f = wigner_single(&rho, &grid()).unwrap();
        for k in 0..f.len() {
            let n = f.node(k);
            let expected = (1.0 + 3f64.sqrt() * n.theta[0].cos()) / FOUR_PI;
            assert!((f.values()[k] - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn plus_state_profile() {
        let rho = DensityMatrix::from_bloch([1.0, 0.0, 0.0]).unwrap();
        for (t, p) in [(0.3, 0.0), (1.2, 2.0), (2.8, 4.4)] {
            let w = wigner_single_at(rho.matrix(), t, p).unwrap();
            let expected = (1.0 + 3f64.sqrt() * t.sin() * p.cos()) / FOUR_PI;
            assert!((w - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn two_qubit_mixed_and_basis() {
        let rho = DensityMatrix::maximally_mixed(4).unwrap();
        let g = SphereGrid::new(8, 8).unwrap();
        let f = wigner_two(&rho, &g, &g).unwrap();
        for v in f.values() {
            assert!((v - 1.0 / (FOUR_PI * FOUR_PI)).abs() < 1e-15);
        }
        assert!((f.integrate() - 1.0).abs() < 1e-12);

        let ket01 = ComplexMatrix::diagonal(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        let (t1, p1, t2, p2) = (PI / 4.0, PI / 8.0, PI / 6.0, PI / 6.0);
        let w = wigner_two_at(&ket01, t1, p1, t2, p2).unwrap();
        let expected = (1.0 + 3f64.sqrt() * t1.cos()) * (1.0 - 3f64.sqrt() * t2.cos()) / (FOUR_PI * FOUR_PI);
        assert!((w - expected).abs() < 1e-15);
        assert!((w + 7.044e-3).abs() < 1e-6);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let op = pauli(Axis::Z);
        let g = grid();
        assert!(wigner_transform(&op, &FieldDomain::SpherePair(g.clone(), g)).is_err());
    }

    #[test]
    fn different_grids_do_not_combine() {
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        let a = wigner_single(&rho, &SphereGrid::new(8, 8).unwrap()).unwrap();
        let b = wigner_single(&rho, &SphereGrid::new(8, 10).unwrap()).unwrap();
        assert!(a.zip_weighted_sum(&b, |x, y| x - y).is_err());
    }
}

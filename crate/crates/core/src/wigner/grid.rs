use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes and weights on `[−1, 1]`, nodes descending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d.is_finite() {
            dp = d;
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Resolution of a [`SphereGrid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridSpec {
    pub n_theta: usize,
    pub n_phi: usize,
}

/// Product quadrature on the unit sphere: Gauss–Legendre in `cos θ` times
/// the uniform trapezoid rule in `φ`.
///
/// Theta weights already include the `sin θ dθ` measure, so summing
/// `theta_weight · phi_weight` over all nodes gives `4π`. Node `k` of the
/// flattened grid is `(k / n_phi, k % n_phi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereGrid {
    spec: GridSpec,
    theta: Vec<f64>,
    cos_theta: Vec<f64>,
    theta_weights: Vec<f64>,
    phi: Vec<f64>,
    phi_weight: f64,
}

impl SphereGrid {
    pub const MIN_NODES: usize = 8;

    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_theta < Self::MIN_NODES || n_phi < Self::MIN_NODES {
            return Err(Error::InvalidArgument("sphere grids need at least 8 nodes per axis"));
        }
        let (x, w) = gauss_legendre(n_theta);
        let theta = x.iter().map(|c| c.acos()).collect();
        let step = 2.0 * PI / n_phi as f64;
        let phi = (0..n_phi).map(|k| k as f64 * step).collect();
        Ok(Self { spec: GridSpec { n_theta, n_phi }, theta, cos_theta: x, theta_weights: w, phi, phi_weight: step })
    }

    pub fn from_spec(spec: GridSpec) -> Result<Self> {
        Self::new(spec.n_theta, spec.n_phi)
    }

    /// The same grid with twice as many nodes along each axis.
    pub fn doubled(&self) -> Self {
        Self::new(2 * self.spec.n_theta, 2 * self.spec.n_phi).expect("doubling keeps sizes valid")
    }

    #[inline]
    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.spec.n_theta * self.spec.n_phi
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn theta_nodes(&self) -> &[f64] {
        &self.theta
    }

    pub fn cos_theta_nodes(&self) -> &[f64] {
        &self.cos_theta
    }

    pub fn theta_weights(&self) -> &[f64] {
        &self.theta_weights
    }

    pub fn phi_nodes(&self) -> &[f64] {
        &self.phi
    }

    pub fn phi_weight(&self) -> f64 {
        self.phi_weight
    }

    /// `(θ, φ, weight)` of flattened node `k`.
    #[inline]
    pub fn node(&self, k: usize) -> (f64, f64, f64) {
        let (it, ip) = (k / self.spec.n_phi, k % self.spec.n_phi);
        (self.theta[it], self.phi[ip], self.theta_weights[it] * self.phi_weight)
    }

    /// Node weights in flattened order.
    pub fn weights(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len());
        for &wt in &self.theta_weights {
            out.extend(core::iter::repeat_n(wt * self.phi_weight, self.spec.n_phi));
        }
        out
    }

    pub fn total_weight(&self) -> f64 {
        self.theta_weights.iter().sum::<f64>() * self.phi_weight * self.spec.n_phi as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_cover_sphere() {
        for (nt, np) in [(8, 8), (16, 32), (64, 64), (33, 9)] {
            let g = SphereGrid::new(nt, np).unwrap();
            let w: f64 = g.weights().iter().sum();
            assert!((w - 4.0 * PI).abs() < 1e-12, "{nt}x{np}: {w}");
        }
    }

    #[test]
    fn gauss_legendre_is_exact_for_polynomials() {
        let (x, w) = gauss_legendre(8);
        // degree ≤ 15 exact: ∫x¹⁴ = 2/15
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(14)).sum();
        assert!((s - 2.0 / 15.0).abs() < 1e-14);
        assert!(x.windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn too_small_grid_rejected() {
        assert!(SphereGrid::new(7, 8).is_err());
        assert!(SphereGrid::new(8, 4).is_err());
    }

    #[test]
    fn node_indexing() {
        let g = SphereGrid::new(8, 10).unwrap();
        let (t, p, w) = g.node(23);
        assert_eq!(t, g.theta_nodes()[2]);
        assert_eq!(p, g.phi_nodes()[3]);
        assert_eq!(w, g.theta_weights()[2] * g.phi_weight());
    }
}

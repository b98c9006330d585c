use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

const HERMITIAN_TOL: f64 = 1e-8;
const JACOBI_OFF_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 64;

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// 2×2 matrices use the closed form; 4×4 matrices are diagonalized by cyclic
/// Jacobi rotations on the real 8×8 embedding `[[A, −B], [B, A]]` of
/// `A + iB`, whose spectrum is that of the input with every value doubled.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let scale = m.max_abs().max(1.0);
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian(defect));
    }
    let h = m.hermitian_part();
    match h.dim() {
        2 => Ok(eigenvalues_2x2(&h).to_vec()),
        _ => Ok(eigenvalues_jacobi(&h)),
    }
}

fn eigenvalues_2x2(h: &ComplexMatrix) -> [f64; 2] {
    let a = h[(0, 0)].re;
    let d = h[(1, 1)].re;
    let b = h[(0, 1)].norm();
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    [mean - half_gap, mean + half_gap]
}

fn eigenvalues_jacobi(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.dim();
    let size = 2 * n;
    let mut a = [[0.0f64; 8]; 8];
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            a[i][j] = z.re;
            a[i + n][j + n] = z.re;
            a[i][j + n] = -z.im;
            a[i + n][j] = z.im;
        }
    }

    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = JACOBI_OFF_TOL * frob.max(1.0);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..size)
            .flat_map(|p| (0..size).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off < target {
            break;
        }
        for p in 0..size - 1 {
            for q in p + 1..size {
                let apq = a[p][q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..size {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..size {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }

    let mut doubled: Vec<f64> = (0..size).map(|i| a[i][i]).collect();
    doubled.sort_by(|x, y| x.total_cmp(y));
    // each eigenvalue appears twice in the embedding
    doubled.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pauli, Axis, C64};

    #[test]
    fn sigma_z_spectrum() {
        assert_eq!(hermitian_eigenvalues(&pauli(Axis::Z)).unwrap(), [-1.0, 1.0]);
    }

    #[test]
    fn maximally_mixed_four() {
        let m = ComplexMatrix::identity(4).unwrap().scale_real(0.25);
        for ev in hermitian_eigenvalues(&m).unwrap() {
            assert!((ev - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn complex_hermitian_four() {
        // σ_y ⊗ σ_y has spectrum {−1, −1, 1, 1}
        let yy = crate::linalg::tensor_product(&pauli(Axis::Y), &pauli(Axis::Y)).unwrap();
        let ev = hermitian_eigenvalues(&yy).unwrap();
        let expected = [-1.0, -1.0, 1.0, 1.0];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-13, "{ev:?}");
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = pauli(Axis::Plus);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian(_))));
        let mut skew = pauli(Axis::X);
        skew[(0, 1)] = C64::new(1.0, 0.5);
        assert!(hermitian_eigenvalues(&skew).is_err());
    }
}

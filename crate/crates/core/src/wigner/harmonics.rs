use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::linalg::C64;

/// Orthonormal spherical harmonic `Y_KQ(θ, φ)` with the Condon–Shortley
/// phase, so `Y_1,±1 = ∓√(3/8π) sin θ e^{±iφ}`. Returns zero for `|Q| > K`.
pub fn spherical_harmonic(k: u32, q: i32, theta: f64, phi: f64) -> C64 {
    let m = q.unsigned_abs();
    if m > k {
        return C64::new(0.0, 0.0);
    }
    let x = theta.cos();
    let sin_t = theta.sin().abs();

    // P_m^m = (−1)^m (2m−1)!! sin^m θ
    let mut pmm = 1.0;
    for i in 1..=m {
        pmm *= -(2.0 * i as f64 - 1.0) * sin_t;
    }
    let plm = if k == m {
        pmm
    } else {
        let mut p_prev = pmm;
        let mut p_cur = x * (2.0 * m as f64 + 1.0) * pmm;
        for l in (m + 2)..=k {
            let lf = l as f64;
            let mf = m as f64;
            let next = ((2.0 * lf - 1.0) * x * p_cur - (lf + mf - 1.0) * p_prev) / (lf - mf);
            p_prev = p_cur;
            p_cur = next;
        }
        p_cur
    };

    // (l−m)!/(l+m)!
    let mut ratio = 1.0;
    for i in (k - m + 1)..=(k + m) {
        ratio /= i as f64;
    }
    let norm = ((2.0 * k as f64 + 1.0) / (4.0 * PI) * ratio).sqrt();
    let y = C64::from_polar(norm * plm, m as f64 * phi);
    if q >= 0 {
        y
    } else if m.is_multiple_of(2) {
        y.conj()
    } else {
        -y.conj()
    }
}

//! Explicit Runge–Kutta integrators for real ODE systems `y' = f(t, y)`.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdaptiveOptions {
    pub atol: f64,
    pub rtol: f64,
    /// First trial step; estimated from the initial slope when `None`.
    pub initial_step: Option<f64>,
    /// Upper bound on the step, e.g. to stay inside the stability region
    /// when fast modes carry almost no amplitude and escape error control.
    pub max_step: Option<f64>,
    /// Smallest step relative to `max(1, |t|)` before giving up.
    pub min_step: f64,
    pub max_steps: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self { atol: 1e-10, rtol: 1e-8, initial_step: None, max_step: None, min_step: 1e-14, max_steps: 50_000_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegrationStats {
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    pub rhs_evaluations: usize,
}

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
// fifth-order minus embedded fourth-order weights
const E: [f64; 7] =
    [71.0 / 57600.0, 0.0, -71.0 / 16695.0, 71.0 / 1920.0, -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0];

/// Adaptive Dormand–Prince 5(4) integration reporting the solution at every
/// entry of `t_out` (strictly increasing; `t_out[0]` is the initial time).
///
/// Output between accepted steps comes from cubic Hermite interpolation of
/// the step endpoints and their slopes.
pub fn dopri5<F>(
    mut f: F,
    y0: &[f64],
    t_out: &[f64],
    opts: &AdaptiveOptions,
) -> Result<(Vec<Vec<f64>>, IntegrationStats)>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    if t_out.is_empty() {
        return Err(Error::InvalidArgument("empty output grid"));
    }
    if t_out.windows(2).any(|w| !(w[1] > w[0])) || t_out.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidArgument("output times must be finite and strictly increasing"));
    }
    let n = y0.len();
    let mut stats = IntegrationStats::default();
    let mut out = Vec::with_capacity(t_out.len());
    out.push(y0.to_vec());
    if t_out.len() == 1 {
        return Ok((out, stats));
    }

    let t_end = t_out[t_out.len() - 1];
    let mut t = t_out[0];
    let mut y = y0.to_vec();
    let mut k: Vec<Vec<f64>> = vec![vec![0.0; n]; 7];
    let mut stage = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    f(t, &y, &mut k[0]);
    stats.rhs_evaluations += 1;

    let mut h = match opts.initial_step {
        Some(h) => h,
        None => initial_step(&y, &k[0], opts, t_end - t),
    };
    let mut next_out = 1;

    while next_out < t_out.len() {
        if stats.accepted_steps + stats.rejected_steps >= opts.max_steps {
            return Err(Error::IntegrationFailure { last_good_time: t });
        }
        h = h.min(t_end - t);
        if let Some(cap) = opts.max_step {
            h = h.min(cap);
        }
        if h < opts.min_step * t.abs().max(1.0) {
            return Err(Error::IntegrationFailure { last_good_time: t });
        }

        for s in 1..7 {
            for i in 0..n {
                let mut acc = y[i];
                for (j, kj) in k.iter().enumerate().take(s) {
                    acc += h * A[s][j] * kj[i];
                }
                stage[i] = acc;
            }
            let (done, rest) = k.split_at_mut(s);
            let _ = done;
            f(t + C[s] * h, &stage, &mut rest[0]);
        }
        stats.rhs_evaluations += 6;
        // the last stage is evaluated at the fifth-order solution
        y_new.copy_from_slice(&stage);

        let mut err_sq = 0.0;
        for i in 0..n {
            let e: f64 = (0..7).map(|s| E[s] * k[s][i]).sum::<f64>() * h;
            let sc = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / sc) * (e / sc);
        }
        let err = (err_sq / n.max(1) as f64).sqrt();
        if !err.is_finite() {
            stats.rejected_steps += 1;
            h *= 0.2;
            continue;
        }

        if err <= 1.0 {
            stats.accepted_steps += 1;
            let t_new = t + h;
            while next_out < t_out.len() && t_out[next_out] <= t_new {
                let tq = t_out[next_out];
                out.push(if tq == t_new { y_new.clone() } else { hermite(t, &y, &k[0], t_new, &y_new, &k[6], tq) });
                next_out += 1;
            }
            t = t_new;
            y.copy_from_slice(&y_new);
            let last = k[6].clone();
            k[0].copy_from_slice(&last);
            let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            h *= factor;
        } else {
            stats.rejected_steps += 1;
            h *= (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
        }
    }
    Ok((out, stats))
}

fn initial_step(y: &[f64], dy: &[f64], opts: &AdaptiveOptions, span: f64) -> f64 {
    let n = y.len().max(1) as f64;
    let scale = |i: usize| opts.atol + opts.rtol * y[i].abs();
    let d0 = (y.iter().enumerate().map(|(i, v)| (v / scale(i)).powi(2)).sum::<f64>() / n).sqrt();
    let d1 = (dy.iter().enumerate().map(|(i, v)| (v / scale(i)).powi(2)).sum::<f64>() / n).sqrt();
    let h = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h.min(span).max(1e-12 * span)
}

fn hermite(t0: f64, y0: &[f64], f0: &[f64], t1: f64, y1: &[f64], f1: &[f64], t: f64) -> Vec<f64> {
    let h = t1 - t0;
    let s = (t - t0) / h;
    let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    let h10 = s * (1.0 - s) * (1.0 - s);
    let h01 = s * s * (3.0 - 2.0 * s);
    let h11 = s * s * (s - 1.0);
    (0..y0.len()).map(|i| h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i]).collect()
}

/// Classical fourth-order Runge–Kutta with `steps` equal steps.
pub fn rk4_fixed<F>(mut f: F, y0: &[f64], t0: f64, t1: f64, steps: usize) -> Vec<f64>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    let n = y0.len();
    let h = (t1 - t0) / steps as f64;
    let mut y = y0.to_vec();
    let (mut k1, mut k2, mut k3, mut k4) = (vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let mut tmp = vec![0.0; n];
    for step in 0..steps {
        let t = t0 + step as f64 * h;
        f(t, &y, &mut k1);
        for i in 0..n {
            tmp[i] = y[i] + 0.5 * h * k1[i];
        }
        f(t + 0.5 * h, &tmp, &mut k2);
        for i in 0..n {
            tmp[i] = y[i] + 0.5 * h * k2[i];
        }
        f(t + 0.5 * h, &tmp, &mut k3);
        for i in 0..n {
            tmp[i] = y[i] + h * k3[i];
        }
        f(t + h, &tmp, &mut k4);
        for i in 0..n {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    y
}

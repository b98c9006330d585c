use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};

/// A half-integer quantum number stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    #[inline]
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn integer(n: i32) -> Self {
        HalfInt(2 * n)
    }

    #[inline]
    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl core::ops::Neg for HalfInt {
    type Output = HalfInt;

    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

fn ln_factorials(n_max: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(n_max + 1);
    let mut acc = 0.0;
    table.push(0.0);
    for k in 1..=n_max {
        acc += (k as f64).ln();
        table.push(acc);
    }
    table
}

/// Wigner 3j symbol `(j1 j2 j3; m1 m2 m3)` from the Racah sum.
///
/// Returns zero when the selection rules fail. Negative `j`, `|m| > j` or a
/// non-integer `j − m` are rejected as malformed.
pub fn wigner_3j(j1: HalfInt, j2: HalfInt, j3: HalfInt, m1: HalfInt, m2: HalfInt, m3: HalfInt) -> Result<f64> {
    let (tj1, tj2, tj3) = (j1.twice(), j2.twice(), j3.twice());
    let (tm1, tm2, tm3) = (m1.twice(), m2.twice(), m3.twice());
    if tj1 < 0 || tj2 < 0 || tj3 < 0 {
        return Err(Error::InvalidArgument("angular momentum must be non-negative"));
    }
    for (tj, tm) in [(tj1, tm1), (tj2, tm2), (tj3, tm3)] {
        if tm.abs() > tj {
            return Err(Error::InvalidArgument("|m| exceeds j"));
        }
        if (tj - tm).rem_euclid(2) != 0 {
            return Err(Error::InvalidArgument("j - m must be an integer"));
        }
    }
    if tm1 + tm2 + tm3 != 0 {
        return Ok(0.0);
    }
    if (tj1 + tj2 + tj3) % 2 != 0 {
        return Ok(0.0);
    }
    if tj3 > tj1 + tj2 || tj3 < (tj1 - tj2).abs() {
        return Ok(0.0);
    }

    // everything below is an integer once halved
    let h = |x: i32| (x / 2) as i64;
    let a = h(tj1 + tj2 - tj3);
    let b = h(tj1 - tj2 + tj3);
    let c = h(-tj1 + tj2 + tj3);
    let total = h(tj1 + tj2 + tj3) + 1;
    let j1pm1 = h(tj1 + tm1);
    let j1mm1 = h(tj1 - tm1);
    let j2pm2 = h(tj2 + tm2);
    let j2mm2 = h(tj2 - tm2);
    let j3pm3 = h(tj3 + tm3);
    let j3mm3 = h(tj3 - tm3);

    let lf = ln_factorials(total as usize + 1);
    let f = |n: i64| lf[n as usize];

    let ln_prefactor =
        0.5 * (f(a) + f(b) + f(c) - f(total) + f(j1pm1) + f(j1mm1) + f(j2pm2) + f(j2mm2) + f(j3pm3) + f(j3mm3));

    // denominators: k, j3−j2+k+m1, j3−j1+k−m2, j1+j2−j3−k, j1−k−m1, j2−k+m2
    let d1 = h(tj3 - tj2 + tm1);
    let d2 = h(tj3 - tj1 - tm2);
    let k_min = 0.max(-d1).max(-d2);
    let k_max = a.min(j1mm1).min(j2pm2);

    let mut sum = 0.0;
    for k in k_min..=k_max {
        let ln_term = ln_prefactor - (f(k) + f(d1 + k) + f(d2 + k) + f(a - k) + f(j1mm1 - k) + f(j2pm2 - k));
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * ln_term.exp();
    }

    let phase_twice = tj1 - tj2 - tm3;
    let phase = if (phase_twice / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(phase * sum)
}

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::threej::{wigner_3j, HalfInt};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// Multipole operator
/// `T_KQ = Σ_{m,m'} (−1)^(j−m) √(2K+1) (j K j; −m Q m') |j,m⟩⟨j,m'|`.
///
/// Row `r` corresponds to `m = j − r`, so for a qubit row 0 is `m = +1/2`
/// (the excited state). Only `j = 1/2` and `j = 3/2` fit a [`ComplexMatrix`].
pub fn multipole_operator(j: HalfInt, k: u32, q: i32) -> Result<ComplexMatrix> {
    let tj = j.twice();
    if tj != 1 && tj != 3 {
        return Err(Error::InvalidArgument("multipole operators need j = 1/2 or j = 3/2"));
    }
    if k as i32 > tj || q.unsigned_abs() > k {
        return Err(Error::InvalidArgument("require 0 <= K <= 2j and |Q| <= K"));
    }
    let dim = (tj + 1) as usize;
    let big_k = HalfInt::integer(k as i32);
    let big_q = HalfInt::integer(q);
    let norm = f64::from(2 * k + 1).sqrt();
    let mut t = ComplexMatrix::zeros(dim)?;
    for r in 0..dim {
        let m = HalfInt::from_twice(tj - 2 * r as i32);
        // (−1)^(j−m) with j − m = r
        let phase = if r % 2 == 0 { 1.0 } else { -1.0 };
        for c in 0..dim {
            let mp = HalfInt::from_twice(tj - 2 * c as i32);
            let w = wigner_3j(j, big_k, j, -m, big_q, mp)?;
            if w != 0.0 {
                t[(r, c)] = C64::new(phase * norm * w, 0.0);
            }
        }
    }
    Ok(t)
}

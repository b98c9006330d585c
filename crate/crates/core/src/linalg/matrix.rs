use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};
use core::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A 2×2 or 4×4 complex matrix stored row-major in a fixed buffer.
///
/// Arithmetic operators panic when the operands have different dimensions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [C64; 16],
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 2 || dim == 4 {
        Ok(())
    } else {
        Err(Error::InvalidArgument("matrix dimension must be 2 or 4"))
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { dim, data: [ZERO; 16] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from `dim * dim` row-major entries.
    pub fn from_rows(dim: usize, entries: &[C64]) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut data = [ZERO; 16];
        data[..entries.len()].copy_from_slice(entries);
        Ok(Self { dim, data })
    }

    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        let mut buf = [ZERO; 16];
        if entries.len() > 16 {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        for (b, &e) in buf.iter_mut().zip(entries) {
            *b = C64::new(e, 0.0);
        }
        Self::from_rows(dim, &buf[..entries.len()])
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(values.len())?;
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        Ok(m)
    }

    /// Outer product `|ψ⟩⟨ψ|`.
    pub fn projector(psi: &[C64]) -> Result<Self> {
        let mut m = Self::zeros(psi.len())?;
        for i in 0..psi.len() {
            for j in 0..psi.len() {
                m[(i, j)] = psi[i] * psi[j].conj();
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    #[inline]
    pub fn entries(&self) -> &[C64] {
        &self.data[..self.dim * self.dim]
    }

    #[inline]
    pub fn entries_mut(&mut self) -> &mut [C64] {
        let n = self.dim * self.dim;
        &mut self.data[..n]
    }

    pub fn adjoint(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        out.entries_mut().iter_mut().for_each(|z| *z *= s);
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `{self, other} = self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        self.entries().iter().zip(other.entries()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − self†`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `(self + self†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale_real(0.5)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * self.dim + j]
    }
}

impl Add for ComplexMatrix {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for ComplexMatrix {
    fn add_assign(&mut self, rhs: Self) {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
    }
}

impl Sub for ComplexMatrix {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        self
    }
}

impl Neg for ComplexMatrix {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl Mul for ComplexMatrix {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self { dim: n, data: [ZERO; 16] };
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

/// Labels accepted by [`pauli`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
    /// `σ₊ = (σ_x + iσ_y)/2 = |0⟩⟨1|`.
    Plus,
    /// `σ₋ = (σ_x − iσ_y)/2 = |1⟩⟨0|`.
    Minus,
    Identity,
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            "plus" | "+" => Ok(Axis::Plus),
            "minus" | "-" => Ok(Axis::Minus),
            "identity" | "i" | "I" => Ok(Axis::Identity),
            _ => Err(Error::InvalidArgument("unknown Pauli label")),
        }
    }
}

/// Standard 2×2 Pauli matrices and ladder operators.
pub fn pauli(which: Axis) -> ComplexMatrix {
    let i = C64::new(0.0, 1.0);
    let entries = match which {
        Axis::X => [ZERO, ONE, ONE, ZERO],
        Axis::Y => [ZERO, -i, i, ZERO],
        Axis::Z => [ONE, ZERO, ZERO, -ONE],
        Axis::Plus => [ZERO, ONE, ZERO, ZERO],
        Axis::Minus => [ZERO, ZERO, ONE, ZERO],
        Axis::Identity => [ONE, ZERO, ZERO, ONE],
    };
    ComplexMatrix::from_rows(2, &entries).expect("static 2x2 entries")
}

/// Kronecker product of two 2×2 matrices; row index is `2·i_a + i_b`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: a.dim() });
    }
    if b.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: b.dim() });
    }
    let mut out = ComplexMatrix::zeros(4)?;
    for ia in 0..2 {
        for ja in 0..2 {
            for ib in 0..2 {
                for jb in 0..2 {
                    out[(2 * ia + ib, 2 * ja + jb)] = a[(ia, ja)] * b[(ib, jb)];
                }
            }
        }
    }
    Ok(out)
}

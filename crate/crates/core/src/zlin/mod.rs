//! Exact sparse integer linear algebra over named generators.
//!
//! All arithmetic is checked 64-bit; overflow surfaces as
//! [`ZlinError::Overflow`] instead of wrapping.

mod matrix;
mod monoid;
mod quotient;
mod snf;
mod vector;

pub use matrix::{DenseMatrix, IntMatrix};
pub use monoid::monoid_coordinates;
pub use quotient::{quotient_free_basis, QuotientBasis};
pub use snf::{smith_dense, smith_normal_form, DenseSmith, SmithDecomposition};
pub use vector::IntVector;

use thiserror::Error;

use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZlinError {
    #[error("integer overflow beyond the checked 64-bit range")]
    Overflow,
    #[error("two distinct non-negative combinations give the same vector")]
    Ambiguous,
    #[error("quotient is not free: invariant factor {factor}")]
    Torsion { factor: i64 },
    #[error("non-negative search is unbounded: dependent generators with mixed signs")]
    Unbounded,
    #[error("unknown index name `{0}`")]
    UnknownName(Name),
    #[error("shape mismatch: {left:?} against {right:?}")]
    Shape { left: (usize, usize), right: (usize, usize) },
}

pub(crate) mod checked {
    use super::ZlinError;

    #[inline]
    pub fn add(a: i64, b: i64) -> Result<i64, ZlinError> {
        a.checked_add(b).ok_or(ZlinError::Overflow)
    }

    #[inline]
    pub fn mul(a: i64, b: i64) -> Result<i64, ZlinError> {
        a.checked_mul(b).ok_or(ZlinError::Overflow)
    }

    #[inline]
    pub fn neg(a: i64) -> Result<i64, ZlinError> {
        a.checked_neg().ok_or(ZlinError::Overflow)
    }

    #[inline]
    pub fn div(a: i64, b: i64) -> Result<i64, ZlinError> {
        a.checked_div(b).ok_or(ZlinError::Overflow)
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s·a + t·b`, `g > 0`.
    pub fn egcd(a: i64, b: i64) -> Result<(i64, i64, i64), ZlinError> {
        let (mut r0, mut r1) = (a as i128, b as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 < 0 {
            (r0, s0, t0) = (-r0, -s0, -t0);
        }
        let cast = |x: i128| i64::try_from(x).map_err(|_| ZlinError::Overflow);
        Ok((cast(r0)?, cast(s0)?, cast(t0)?))
    }
}

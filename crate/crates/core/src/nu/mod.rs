//! The realization of a complex as an ω-category of tables.
//!
//! Faces truncate a table, identities pad it with a zero row, and
//! `x ∗_p y` keeps the source rows of `x` and target rows of `y` up to `p`
//! and adds the rows above.

mod enumerate;
mod oracle;
mod table;

pub(crate) use enumerate::close;
pub use enumerate::{enumerate_nu, indecomposables, Caps, Composition, EnumeratedOmegaCat};
pub use oracle::brute_force_nu;
pub use table::{NuTable, Sign, TableViolation};

use thiserror::Error;

use crate::adc::AdcError;
use crate::zlin::ZlinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NuError {
    #[error("level {level} is not below dimension {dim}")]
    Dim { level: usize, dim: usize },
    #[error("cannot compose cells of dimensions {left} and {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("not composable at level {level}: target and source differ")]
    NotComposable { level: usize },
    #[error("enumeration cap exceeded in dimension {dim}: {limit}")]
    EnumCap { dim: usize, limit: CapLimit },
    #[error(transparent)]
    Adc(#[from] AdcError),
    #[error(transparent)]
    Zlin(#[from] ZlinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapLimit {
    Cells(usize),
    Coefficient(i64),
}

impl std::fmt::Display for CapLimit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CapLimit::Cells(n) => write!(f, "more than {n} cells"),
            CapLimit::Coefficient(k) => write!(f, "a coefficient above {k}"),
        }
    }
}

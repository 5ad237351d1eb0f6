//! Strict ω-categories presented by polygraphs, augmented directed
//! complexes with basis, and the linearization and realization functors
//! between them.

pub mod adc;
pub mod catalog;
pub mod format;
pub mod graph;
mod name;
pub mod nu;
pub mod polygraph;
pub mod roundtrip;
pub mod zlin;

pub use adc::{decompose, Adc, AdcError, AtomTable, Decomposition};
pub use graph::RelationGraph;
pub use name::Name;
pub use nu::{enumerate_nu, Caps, EnumeratedOmegaCat, NuError, NuTable, Sign};
pub use roundtrip::{check_omega_basis, lambda_of_enumerated, verify_equivalence, BasisBullet, BasisFailure, EquivalenceReport, QuotientLambda, RoundtripError};
pub use polygraph::{CellExpr, PolyPresentation, PolygraphError, PresentationBuilder, Verdict};
pub use zlin::{IntMatrix, IntVector, ZlinError};

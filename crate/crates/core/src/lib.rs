//! Jaco graphs: construction from polynomial incidence functions, structural
//! invariants, and exact minimum/maximum chromatic sums with their chromatic
//! mean and variance.
//!
//! A Jaco graph `J_n(f)` has vertices `v_1..v_n` and an arc `(v_i, v_j)`,
//! `i < j`, exactly when `f(i) + i - d⁻(v_i) >= j`. Building in ascending
//! index order fixes every in-degree before the vertex's out-arcs are
//! emitted, so each vertex is fully described by its in-degree and its
//! *reach* `f(i) + i - d⁻(v_i)`.

pub mod braided;
pub mod builder;
pub mod chroma;
mod error;
pub mod export;
pub mod incidence;
pub mod invariants;
pub mod oracle;
pub mod published;
pub mod tables;
pub mod verify;

pub use builder::{JacoGraph, RootStream, VertexRecord};
pub use chroma::{ChromaticReport, ProperColouring, SimpleGraph};
pub use error::{Error, Result};
pub use incidence::{FamilyClass, IncidencePolynomial};
pub use invariants::InvariantReport;

/// Exact rational used for chromatic means and variances.
pub type Rational = num_rational::Ratio<i128>;

//! Structure theory of finite-dimensional evolution algebras with exact
//! arithmetic.
//!
//! An evolution algebra is given by its structure matrix in a natural basis
//! `e_1, ..., e_n`: column `i` holds the coordinates of `e_i^2`, and distinct
//! basis elements multiply to zero. From that matrix the crate derives the
//! associated directed graph, ideals such as the annihilator and the
//! absorption radical, quotients, simplicity verdicts and the decomposition
//! into a direct sum of evolution ideals.
//!
//! Indices are 0-based in the API; [`IndexSet`] and error messages display
//! them 1-based, as `e_1, ..., e_n`.
//!
//! ```
//! use evolalg_core::{decompose, EvolutionAlgebra, FieldDescriptor};
//!
//! // e1^2 = e2, e2^2 = e1, e3^2 = e3
//! let a = EvolutionAlgebra::from_i64_squares(
//!     FieldDescriptor::Rational,
//!     &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]],
//! )
//! .unwrap();
//! let report = decompose::optimal_decomposition(&a).unwrap();
//! assert_eq!(report.fragmentation.blocks.len(), 2);
//! assert!(report.optimal_certified);
//! ```

pub mod algebra;
pub mod decompose;
pub mod error;
pub mod field;
pub mod graph;
pub mod ideals;
pub mod index_set;
pub mod linalg;
pub mod oracle;
mod union_find;

pub use algebra::{Element, EvolutionAlgebra};
pub use decompose::{
    CanonicalPart, DecompositionReport, Fragmentation, IrreducibilityVerdict, PartKind,
    SimplicityReason, SimplicityVerdict,
};
pub use error::{Error, Result};
pub use field::{FieldDescriptor, Scalar};
pub use graph::{AssociatedGraph, WitnessPath};
pub use ideals::{Ideal, QuotientPresentation};
pub use index_set::IndexSet;
pub use linalg::{Matrix, Subspace};
pub use oracle::EnumerationBudget;

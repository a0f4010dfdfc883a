//! Finite-model workbench for cylindric ortholattices.
//!
//! Algebras are finite tables; every structure the crate builds (filter
//! spectra, Goldblatt frames, biorthogonally closed sets, canonical
//! completions, spectral dual spaces) is enumerated exhaustively and checked
//! against its defining axioms. Validators return a [`ValidationReport`]
//! naming the first failing tuple of each failed axiom.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod completion;
pub mod duality;
pub mod error;
pub mod filters;
pub mod frames;
pub mod report;
pub mod subset;
pub mod topology;

pub use algebra::{AlgebraHom, CylindricOrtholattice, FiniteBoundedLattice, Ortholattice, SetAlgebra};
pub use error::{Error, Limits, Result};
pub use report::{Certificate, ValidationReport, Verdict};
pub use subset::{Relation, Subset};

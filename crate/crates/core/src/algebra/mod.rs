//! Finite ortholattices, quantifiers, cylindric structure and homomorphisms,
//! with exhaustive axiom validators.

mod cylindric;
mod family;
mod hom;
mod lattice;
mod ortho;

pub use cylindric::CylindricOrtholattice;
pub use family::{set_label, SetAlgebra};
pub(crate) use family::{build_set_algebra, FamilyOps};
pub use hom::AlgebraHom;
pub use lattice::FiniteBoundedLattice;
pub use ortho::{closed_elements, validate_quantifier, Ortholattice};

pub(crate) use cylindric::dim_label;

//! Finite topological spaces, spectral-space checks, the upset topology of
//! the specialization order, and the UVO and UV axiom batteries.

mod space;
mod upset;
mod uv;
mod uvo;

pub use space::{family_lattice, finite_subcover, FiniteSpace, OpenFamilies};
pub use upset::UpsetOperators;
pub use uv::validate_uv;
pub use uvo::validate_uvo;

//! The dual functors: spectra of algebras, algebras of spaces, their
//! action on morphisms, and certificates for the representation,
//! realization and coincidence results.

mod boolean;
mod maps;
mod objects;

pub use boolean::{check_coincidence, compare_families, reg_completion_ba, FamilyComparison};
pub use maps::{
    dual_of_hom, dual_of_map, preimage_hom, preimage_map, transported, validate_space_map, validate_uv_map,
    validate_uvo_map, verify_commuting_squares, verify_hom_square, verify_map_square, SpaceMap,
};
pub use objects::{
    a0, dual_algebra, dual_space, f0, g0, reg_algebra, representation, s0, validate_space, verify_realization,
    verify_realization_ba, verify_realization_ol, verify_representation, verify_representation_ba,
    verify_representation_ol, DualSpace, Track,
};

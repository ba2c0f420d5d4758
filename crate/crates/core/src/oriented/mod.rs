//! Oriented colourings through the order-6 tournament `T`.

pub mod family;
pub mod homomorphism;
pub mod tournament;
pub mod walks;

pub use family::{build_g, build_g_decomposed, gi_lower_bound_check, GiCheck};
pub use homomorphism::{
    cycle_homomorphism, ear_images, extend_homomorphism, oriented_coloring_le3, search_tight_le3,
    TightInstance,
};
pub use tournament::{tournament_classes, Tournament};
pub use walks::{
    missing_walk, t_catalog, tournament_from_walks, tournament_t, uniqueness_census,
    verify_closed_walk_property, verify_walk_property, walk_catalog, Census, MissingWalk,
    WalkCatalog, REFERENCE_WALKS,
};

//! Tate resolutions over the integers and their homology.

pub mod complex;
pub mod homology;
pub mod lemmas;
pub mod presets;
pub mod relation;
pub mod spec_file;

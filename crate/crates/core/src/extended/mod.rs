//! The extended model: sequences interlaced by an arbitrary word in `{≺, ≻, ≺′, ≻′}` and the
//! admissible matchings of the graph `G_◊`.

mod contract;
mod geometry;
mod matching;
mod plane;
mod search;
mod seq;
mod word;

pub use contract::{alternating_words, contract_to_steep, ext_to_steep, steep_to_ext};
pub use geometry::{build_geometry, ColumnGeometry, Edge, Vertex};
pub use matching::{minimal_matching, psi_inverse, sufficient_half_height, ExtFlip, Face, MatchingWindow};
pub use plane::{plane_partition_adapter, plane_partition_array, plane_partition_word};
pub use search::{check_flip_graph, flip_effects, search_half_height, FlipGraphReport};
pub use seq::{pure_extended_counts, pure_extended_sequences, ExtendedSeq};
pub use word::DiamondWord;

#[cfg(test)]
mod tests;

//! Steep tilings: words, sequences of interlaced partitions, tiling windows, heights and flips.

pub mod adapters;
pub mod height;
pub mod seq;
pub mod tiling;
pub mod word;

pub use adapters::{
    aztec_check, overpartition_to_seq, pyramid_relations, pyramid_word, seq_to_overpartition, AztecReport, OverEntry,
    Overpartition,
};
pub use height::{height_function, height_offsets, HeightField};
pub use seq::{pure_sequences, BoundaryMode, FlipDir, InterlacedSeq, SeqFlip};
pub use tiling::{
    frontier_point, minimal_tiling, seq_to_tiling, sufficient_half_width, Domino, Going, Orient, TilingFlip,
    TilingWindow,
};
pub use word::{Sign, SignWord};

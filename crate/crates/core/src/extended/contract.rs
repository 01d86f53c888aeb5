//! Alternating diamond words and steep tilings.

use crate::error::Result;
use crate::steep::{InterlacedSeq, SignWord};

use super::seq::ExtendedSeq;
use super::word::DiamondWord;

/// The steep word of an alternating diamond word.
pub fn contract_to_steep(diamond: &DiamondWord) -> Result<SignWord> {
    diamond.to_sign_word()
}

/// The same partitions, read as a steep sequence.
pub fn ext_to_steep(s: &ExtendedSeq) -> Result<InterlacedSeq> {
    InterlacedSeq::new(contract_to_steep(s.diamond())?, s.lambdas().to_vec())
}

pub fn steep_to_ext(s: &InterlacedSeq) -> ExtendedSeq {
    ExtendedSeq::new(DiamondWord::from_sign_word(s.word()), s.lambdas().to_vec()).expect("same relations")
}

/// Alternating diamond words of even length up to `max_len`.
pub fn alternating_words(max_len: usize) -> Vec<DiamondWord> {
    (1..=max_len / 2).flat_map(|l| SignWord::all(2 * l)).map(|w| DiamondWord::from_sign_word(&w)).collect()
}

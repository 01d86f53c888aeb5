use serde::{Deserialize, Serialize};

use crate::chain::{self, Candidates, End};
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::word::DiamondWord;

/// `(λ^(0), …, λ^(k))` with `λ^(i−1) ◊_i λ^(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ExtWire", into = "ExtWire")]
pub struct ExtendedSeq {
    diamond: DiamondWord,
    lambdas: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct ExtWire {
    diamond: DiamondWord,
    partitions: Vec<Partition>,
}

impl TryFrom<ExtWire> for ExtendedSeq {
    type Error = Error;
    fn try_from(w: ExtWire) -> Result<ExtendedSeq> {
        ExtendedSeq::new(w.diamond, w.partitions)
    }
}

impl From<ExtendedSeq> for ExtWire {
    fn from(s: ExtendedSeq) -> ExtWire {
        ExtWire { diamond: s.diamond, partitions: s.lambdas }
    }
}

impl ExtendedSeq {
    pub fn new(diamond: DiamondWord, lambdas: Vec<Partition>) -> Result<ExtendedSeq> {
        chain::check_chain(diamond.symbols(), &lambdas)?;
        Ok(ExtendedSeq { diamond, lambdas })
    }

    pub fn empty(diamond: &DiamondWord) -> ExtendedSeq {
        ExtendedSeq { diamond: diamond.clone(), lambdas: vec![Partition::empty(); diamond.len() + 1] }
    }

    pub fn diamond(&self) -> &DiamondWord {
        &self.diamond
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    pub fn lambda(&self, j: usize) -> &Partition {
        &self.lambdas[j]
    }

    pub fn is_pure(&self) -> bool {
        self.lambdas[0].is_empty() && self.lambdas[self.diamond.len()].is_empty()
    }

    /// `Σ_j |λ^(j)|`.
    pub fn size(&self) -> usize {
        self.lambdas.iter().map(Partition::size).sum()
    }

    /// `|λ^(j)|` for each `j`: the flips at abscissa `3j/2`.
    pub fn per_abscissa(&self) -> Vec<usize> {
        self.lambdas.iter().map(Partition::size).collect()
    }
}

/// All pure sequences with `Σ|λ| ≤ budget`.
pub fn pure_extended_sequences(diamond: &DiamondWord, budget: usize) -> Vec<ExtendedSeq> {
    let e = End::Fixed(Partition::empty());
    chain::chains(diamond.symbols(), &e, &e, budget, Candidates::Strips)
        .into_iter()
        .map(|lambdas| ExtendedSeq { diamond: diamond.clone(), lambdas })
        .collect()
}

/// `|{pure s : Σ|λ| = n}|` for `n ≤ budget`, by enumeration.
pub fn pure_extended_counts(diamond: &DiamondWord, budget: usize) -> Vec<u64> {
    chain::pure_counts(diamond.symbols(), budget, Candidates::Strips)
}

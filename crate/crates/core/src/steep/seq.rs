use serde::{Deserialize, Serialize};

use crate::chain::{self, Candidates, End};
use crate::error::{Error, Result};
use crate::maya::MayaDiagram;
use crate::partition::{interlaced, Partition};
use crate::Half;

use super::word::SignWord;

/// Which boundary diagonals may flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryMode {
    /// Neither rim: `λ^(0) = λ^(2ℓ) = ∅` stays fixed.
    Pure,
    /// Right rim free, left rim pure.
    Mixed,
    /// Both rims free.
    Free,
    /// The rims fit into one another: `λ^(0) = λ^(2ℓ)` move together.
    Periodic,
}

impl BoundaryMode {
    pub fn allows(self, m: usize, two_l: usize) -> bool {
        match self {
            BoundaryMode::Pure => m > 0 && m < two_l,
            BoundaryMode::Mixed => m > 0 && m <= two_l,
            BoundaryMode::Free => m <= two_l,
            BoundaryMode::Periodic => m < two_l,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlipDir {
    Up,
    Down,
}

impl FlipDir {
    pub fn delta(self) -> i64 {
        match self {
            FlipDir::Up => 1,
            FlipDir::Down => -1,
        }
    }

    pub fn reverse(self) -> FlipDir {
        match self {
            FlipDir::Up => FlipDir::Down,
            FlipDir::Down => FlipDir::Up,
        }
    }
}

/// A flip on diagonal `m` moving part `row` (0-based) of `λ^(m)` by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqFlip {
    pub m: usize,
    pub row: usize,
    pub dir: FlipDir,
}

/// A word with partitions `λ^(0..=2ℓ)` interlaced as the word prescribes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SeqWire", into = "SeqWire")]
pub struct InterlacedSeq {
    word: SignWord,
    lambdas: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct SeqWire {
    word: SignWord,
    partitions: Vec<Partition>,
}

impl TryFrom<SeqWire> for InterlacedSeq {
    type Error = Error;
    fn try_from(w: SeqWire) -> Result<InterlacedSeq> {
        InterlacedSeq::new(w.word, w.partitions)
    }
}

impl From<InterlacedSeq> for SeqWire {
    fn from(s: InterlacedSeq) -> SeqWire {
        SeqWire { word: s.word, partitions: s.lambdas }
    }
}

impl InterlacedSeq {
    pub fn new(word: SignWord, lambdas: Vec<Partition>) -> Result<InterlacedSeq> {
        chain::check_chain(&word.relations(), &lambdas)?;
        Ok(InterlacedSeq { word, lambdas })
    }

    pub fn empty(word: &SignWord) -> InterlacedSeq {
        InterlacedSeq { word: word.clone(), lambdas: vec![Partition::empty(); word.len() + 1] }
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    pub fn lambda(&self, m: usize) -> &Partition {
        &self.lambdas[m]
    }

    pub fn is_pure(&self) -> bool {
        self.lambdas[0].is_empty() && self.lambdas[self.word.len()].is_empty()
    }

    /// Total number of flips from the minimal tiling: `Σ_m |λ^(m)|`.
    pub fn flip_distance(&self) -> usize {
        self.lambdas.iter().map(Partition::size).sum()
    }

    /// `(|λ^(0)|, …, |λ^(2ℓ)|)`.
    pub fn per_diagonal_flips(&self) -> Vec<usize> {
        self.lambdas.iter().map(Partition::size).collect()
    }

    /// Particle configuration of diagonal `m`.
    pub fn maya(&self, m: usize) -> MayaDiagram {
        MayaDiagram::new(self.lambdas[m].clone(), Half::int(self.word.charges()[m]))
    }

    pub fn flip(&self, flip: SeqFlip, mode: BoundaryMode) -> Result<InterlacedSeq> {
        let SeqFlip { m, row, dir } = flip;
        let two_l = self.word.len();
        if m > two_l {
            return Err(Error::InvalidFlip(format!("diagonal {m} outside 0..={two_l}")));
        }
        if !mode.allows(m, two_l) {
            return Err(Error::InvalidFlip(format!("diagonal {m} is frozen in {mode:?} mode")));
        }
        if mode == BoundaryMode::Periodic && self.lambdas[0] != self.lambdas[two_l] {
            return Err(Error::InvalidFlip("periodic mode needs λ^(0) = λ^(2ℓ)".into()));
        }
        let new = self.lambdas[m]
            .adjust(row, dir.delta())
            .ok_or_else(|| Error::InvalidFlip(format!("part {} of λ^({m}) cannot move by {}", row + 1, dir.delta())))?;
        let mut lambdas = self.lambdas.clone();
        lambdas[m] = new.clone();
        if mode == BoundaryMode::Periodic && m == 0 {
            lambdas[two_l] = new;
        }
        let rels = self.word.relations();
        let touched: Vec<usize> = match (mode, m) {
            (BoundaryMode::Periodic, 0) => vec![1, two_l],
            _ => [m, m + 1].into_iter().filter(|&s| s >= 1 && s <= two_l).collect(),
        };
        for step in touched {
            let rel = rels[step - 1];
            if !interlaced(&lambdas[step - 1], &lambdas[step], rel) {
                return Err(Error::Interlacing { relation: rel, step });
            }
        }
        Ok(InterlacedSeq { word: self.word.clone(), lambdas })
    }

    /// Every legal flip, in order of diagonal, row, direction.
    pub fn neighbors(&self, mode: BoundaryMode) -> Vec<(SeqFlip, InterlacedSeq)> {
        let two_l = self.word.len();
        let mut out = Vec::new();
        for m in 0..=two_l {
            if !mode.allows(m, two_l) {
                continue;
            }
            for row in 0..=self.lambdas[m].len() {
                for dir in [FlipDir::Up, FlipDir::Down] {
                    let f = SeqFlip { m, row, dir };
                    if let Ok(s) = self.flip(f, mode) {
                        out.push((f, s));
                    }
                }
            }
        }
        out
    }
}

/// All pure sequences of `w` with `Σ|λ| ≤ budget`.
pub fn pure_sequences(w: &SignWord, budget: usize) -> Vec<InterlacedSeq> {
    let e = End::Fixed(Partition::empty());
    chain::chains(&w.relations(), &e, &e, budget, Candidates::Strips)
        .into_iter()
        .map(|lambdas| InterlacedSeq { word: w.clone(), lambdas })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    pub(crate) fn example_seq() -> InterlacedSeq {
        let w: SignWord = "+++++---++".parse().unwrap();
        let mut lambdas = vec![p(&[1, 1]); 6];
        lambdas.extend([p(&[]), p(&[]), p(&[]), p(&[1]), p(&[2, 1])]);
        InterlacedSeq::new(w, lambdas).unwrap()
    }

    #[test]
    fn example_distance() {
        let s = example_seq();
        assert_eq!(s.flip_distance(), 16);
        assert_eq!(s.per_diagonal_flips(), vec![2, 2, 2, 2, 2, 2, 0, 0, 0, 1, 3]);
        assert!(!s.is_pure());
    }

    #[test]
    fn smallest_flip_and_back() {
        let w: SignWord = "+-".parse().unwrap();
        let e = InterlacedSeq::empty(&w);
        let up = e.flip(SeqFlip { m: 1, row: 0, dir: FlipDir::Up }, BoundaryMode::Pure).unwrap();
        assert_eq!(up.lambda(1), &p(&[1]));
        assert_eq!(up.flip_distance(), 1);
        let back = up.flip(SeqFlip { m: 1, row: 0, dir: FlipDir::Down }, BoundaryMode::Pure).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn boundary_frozen_in_pure_mode() {
        let w: SignWord = "+-".parse().unwrap();
        let e = InterlacedSeq::empty(&w);
        assert!(e.flip(SeqFlip { m: 0, row: 0, dir: FlipDir::Up }, BoundaryMode::Pure).is_err());
        assert!(e.flip(SeqFlip { m: 2, row: 0, dir: FlipDir::Up }, BoundaryMode::Mixed).is_err());
        assert!(e.flip(SeqFlip { m: 1, row: 0, dir: FlipDir::Up }, BoundaryMode::Mixed).is_ok());
    }

    #[test]
    fn bad_flip_names_relation() {
        let w: SignWord = "+-".parse().unwrap();
        let s = InterlacedSeq::new(w, vec![p(&[]), p(&[1]), p(&[])]).unwrap();
        let err = s.flip(SeqFlip { m: 1, row: 0, dir: FlipDir::Up }, BoundaryMode::Pure).unwrap_err();
        assert!(matches!(err, Error::Interlacing { step: 2, .. }));
    }

    #[test]
    fn json_format() {
        let s = example_seq();
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.starts_with(r#"{"word":"+++++---++","partitions":[[1,1],"#));
        let back: InterlacedSeq = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"word":"+-","partitions":[[],[2],[]]}"#;
        assert!(serde_json::from_str::<InterlacedSeq>(bad).is_err());
    }
}

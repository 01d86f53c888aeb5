use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::StripRelation;
use crate::steep::{Sign, SignWord};

/// A word `◊ ∈ {≺, ≻, ≺′, ≻′}^k`, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiamondWord(Vec<StripRelation>);

impl DiamondWord {
    pub fn new(symbols: Vec<StripRelation>) -> Result<DiamondWord> {
        if symbols.is_empty() {
            return Err(Error::InvalidWord {
                word: String::new(),
                reason: "a diamond word needs at least one symbol".into(),
            });
        }
        Ok(DiamondWord(symbols))
    }

    /// The relations of a steep word: horizontal on odd steps, vertical on even ones.
    pub fn from_sign_word(w: &SignWord) -> DiamondWord {
        DiamondWord(w.relations())
    }

    pub fn symbols(&self) -> &[StripRelation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `◊_i`, 1-based.
    pub fn symbol(&self, i: usize) -> StripRelation {
        self.0[i - 1]
    }

    /// Every word of length `k`, in lexicographic order of `StripRelation::ALL`.
    pub fn all(k: usize) -> Vec<DiamondWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|p: Vec<StripRelation>| {
                    StripRelation::ALL.into_iter().map(move |r| {
                        let mut p = p.clone();
                        p.push(r);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DiamondWord).collect()
    }

    pub fn all_up_to(max_len: usize) -> Vec<DiamondWord> {
        (1..=max_len).flat_map(DiamondWord::all).collect()
    }

    /// Even length, unprimed on odd steps and primed on even ones: the steep tiling case.
    pub fn is_alternating(&self) -> bool {
        self.len().is_multiple_of(2) && self.0.iter().enumerate().all(|(i, r)| r.is_vertical() == (i % 2 == 1))
    }

    /// The steep word `w_i = +` iff `◊_i ∈ {≺, ≺′}`, for alternating words.
    pub fn to_sign_word(&self) -> Result<SignWord> {
        if !self.is_alternating() {
            return Err(Error::InvalidWord {
                word: self.to_string(),
                reason: "contraction needs an even-length word, unprimed on odd steps and primed on even ones".into(),
            });
        }
        SignWord::new(self.0.iter().map(|r| if r.is_plus() { Sign::Plus } else { Sign::Minus }).collect())
    }

    /// `◊_1 ⋯ ◊_k` with Unicode symbols.
    pub fn symbolic(&self) -> String {
        self.0.iter().map(|r| r.symbol()).collect()
    }
}

impl fmt::Display for DiamondWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.0.iter().map(|r| r.token()).collect();
        f.write_str(&tokens.join(","))
    }
}

impl FromStr for DiamondWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<DiamondWord> {
        let symbols = s
            .split(',')
            .map(StripRelation::from_token)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidWord { word: s.into(), reason: e.to_string() })?;
        DiamondWord::new(symbols)
    }
}

impl Serialize for DiamondWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DiamondWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<DiamondWord, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

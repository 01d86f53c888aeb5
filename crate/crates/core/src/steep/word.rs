use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::StripRelation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `+1` or `−1`.
    pub fn value(self) -> i64 {
        if self.is_plus() {
            1
        } else {
            -1
        }
    }

    pub fn flip(self) -> Sign {
        if self.is_plus() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    fn ch(self) -> char {
        if self.is_plus() {
            '+'
        } else {
            '-'
        }
    }
}

/// Asymptotic data `w ∈ {+,−}^{2ℓ}`, `ℓ ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignWord(Vec<Sign>);

impl SignWord {
    pub fn new(signs: Vec<Sign>) -> Result<SignWord> {
        if signs.is_empty() || !signs.len().is_multiple_of(2) {
            let word: String = signs.iter().map(|s| s.ch()).collect();
            return Err(Error::InvalidWord { word, reason: "length must be even and positive".into() });
        }
        Ok(SignWord(signs))
    }

    /// `+^a −^b`.
    pub fn blocks(plus: usize, minus: usize) -> Result<SignWord> {
        let mut v = vec![Sign::Plus; plus];
        v.extend(std::iter::repeat_n(Sign::Minus, minus));
        SignWord::new(v)
    }

    /// `(+−)^ℓ`.
    pub fn aztec(l: usize) -> Result<SignWord> {
        SignWord::new((0..2 * l).map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus }).collect())
    }

    /// Every word of length `len`, in lexicographic order with `+ < −`.
    pub fn all(len: usize) -> Vec<SignWord> {
        (0..1usize << len)
            .map(|bits| {
                let signs =
                    (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect();
                SignWord(signs)
            })
            .collect()
    }

    /// Every word of even length `2..=max_len`.
    pub fn all_up_to(max_len: usize) -> Vec<SignWord> {
        (1..=max_len / 2).flat_map(|l| SignWord::all(2 * l)).collect()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// `w_i`, 1-based.
    pub fn sign(&self, i: usize) -> Sign {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `ℓ`, half the length.
    pub fn half_len(&self) -> usize {
        self.0.len() / 2
    }

    pub fn has_both_signs(&self) -> bool {
        self.0.contains(&Sign::Plus) && self.0.contains(&Sign::Minus)
    }

    /// Relation between `λ^(i-1)` and `λ^(i)`: horizontal on odd steps, vertical on even ones.
    pub fn relations(&self) -> Vec<StripRelation> {
        self.0.iter().enumerate().map(|(i, s)| StripRelation::new(s.is_plus(), i % 2 == 1)).collect()
    }

    /// `c_0..c_{2ℓ}` with `c_0 = 0`: an odd `+` step or an even `−` step raises the charge by one.
    pub fn charges(&self) -> Vec<i64> {
        let mut c = vec![0i64];
        for (i, s) in self.0.iter().enumerate() {
            let odd_step = i % 2 == 0;
            let up = s.is_plus() == odd_step;
            c.push(c[i] + i64::from(up));
        }
        c
    }

    /// Pairs `(i, j)`, 1-based, `i < j`, with `w_i = +` and `w_j = −`.
    pub fn plus_minus_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.sign(i).is_plus() && !self.sign(j).is_plus() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.ch())?;
        }
        Ok(())
    }
}

impl FromStr for SignWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignWord> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                other => Err(Error::InvalidWord { word: s.into(), reason: format!("unexpected character {other:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        SignWord::new(signs)
            .map_err(|_| Error::InvalidWord { word: s.into(), reason: "length must be even and positive".into() })
    }
}

impl Serialize for SignWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<SignWord, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn charge_examples() {
        assert_eq!(w("+-").charges(), vec![0, 1, 2]);
        assert_eq!(w("+++++---++").charges(), vec![0, 1, 1, 2, 2, 3, 4, 4, 5, 6, 6]);
        assert_eq!(w("--").charges(), vec![0, 0, 1]);
    }

    #[test]
    fn parse_rejects_odd_and_junk() {
        assert!("+".parse::<SignWord>().is_err());
        assert!("".parse::<SignWord>().is_err());
        assert!("+x".parse::<SignWord>().is_err());
        assert_eq!(w("+−").to_string(), "+-");
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(SignWord::all_up_to(6).len(), 84);
        assert_eq!(SignWord::all(2), vec![w("++"), w("+-"), w("-+"), w("--")]);
    }

    #[test]
    fn relations_alternate() {
        use StripRelation::*;
        assert_eq!(w("+-+-").relations(), vec![HPlus, VMinus, HPlus, VMinus]);
    }
}

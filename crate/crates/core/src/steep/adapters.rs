//! Classical families seen as steep tilings: Aztec diamonds, pyramid partitions and plane
//! overpartitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, StripRelation};

use super::seq::InterlacedSeq;
use super::word::{Sign, SignWord};

/// Outcome of the Aztec confinement check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AztecReport {
    pub violations: Vec<String>,
}

impl AztecReport {
    pub fn confined(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For `w = (+−)^ℓ`: `λ^(2k−1)`, `λ^(2k)` have at most `k` rows and `λ^(2k−2)`, `λ^(2k−1)`
/// at most `ℓ + 1 − k` columns.
pub fn aztec_check(l: usize, s: &InterlacedSeq) -> Result<AztecReport> {
    if *s.word() != SignWord::aztec(l)? {
        return Err(Error::InvalidWord { word: s.word().to_string(), reason: format!("expected (+-)^{l}") });
    }
    let mut violations = Vec::new();
    if !s.is_pure() {
        violations.push("sequence is not pure".to_string());
    }
    for k in 1..=l {
        for m in [2 * k - 1, 2 * k] {
            if s.lambda(m).len() > k {
                violations.push(format!("λ^({m}) has more than {k} rows"));
            }
        }
        for m in [2 * k - 2, 2 * k - 1] {
            if s.lambda(m).first() as usize > l + 1 - k {
                violations.push(format!("λ^({m}) has more than {} columns", l + 1 - k));
            }
        }
    }
    Ok(AztecReport { violations })
}

/// `∅ = λ^(0) ≺ λ^(1) ≺′ … λ^(ℓ) ≻′ λ^(ℓ+1) ≻ … ≻′ λ^(2ℓ) = ∅`, with the prime on even steps.
pub fn pyramid_relations(l: usize) -> Vec<StripRelation> {
    (1..=2 * l).map(|i| StripRelation::new(i <= l, i % 2 == 0)).collect()
}

/// `+^ℓ −^ℓ`.
pub fn pyramid_word(l: usize) -> Result<SignWord> {
    SignWord::blocks(l, l)
}

/// A plane partition with a bar flag per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Overpartition {
    pub rows: Vec<Vec<OverEntry>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OverEntry {
    pub value: u32,
    pub overlined: bool,
}

impl Overpartition {
    pub fn shape(&self) -> Result<Partition> {
        Partition::from_padded(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    fn at(&self, r: usize, c: usize) -> Option<OverEntry> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// Plane partition shape and ordering, entries in `1..=l`, and the bar rules: in a row only
    /// the last occurrence of a value may carry a bar; in a column every occurrence but the
    /// first must carry one.
    pub fn validate(&self, l: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidOverpartition(msg));
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
            return bad("rows do not form a partition shape".into());
        }
        for (r, row) in self.rows.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.value == 0 || e.value as usize > l {
                    return bad(format!("entry {} at ({r}, {c}) outside 1..={l}", e.value));
                }
                if let Some(right) = self.at(r, c + 1) {
                    if right.value > e.value {
                        return bad(format!("row {r} increases at column {c}"));
                    }
                    if right.value == e.value && e.overlined {
                        return bad(format!("overlined repeat in row {r} at column {c}"));
                    }
                }
                if let Some(below) = self.at(r + 1, c) {
                    if below.value > e.value {
                        return bad(format!("column {c} increases at row {r}"));
                    }
                    if below.value == e.value && !below.overlined {
                        return bad(format!("non-overlined repeat in column {c} at row {}", r + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// Row lengths of the cells selected by `keep`, which must be left-justified.
    fn shape_where(&self, keep: impl Fn(OverEntry) -> bool) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let n = row.iter().take_while(|e| keep(**e)).count();
            if row[n..].iter().any(|e| keep(*e)) {
                return Err(Error::InvalidOverpartition("selected cells are not left-justified".into()));
            }
            parts.push(n as u32);
        }
        Partition::from_padded(parts)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> =
                row.iter().map(|e| if e.overlined { format!("{}̄", e.value) } else { e.value.to_string() }).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Sequence with word `+^{2ℓ}`: `λ^(2i−1)` adds the plain entries equal to `ℓ + 1 − i`,
/// `λ^(2i)` the overlined ones.
pub fn overpartition_to_seq(o: &Overpartition, l: usize) -> Result<InterlacedSeq> {
    o.validate(l)?;
    let mut lambdas = vec![Partition::empty()];
    for i in 1..=l as u32 {
        let v = l as u32 + 1 - i;
        lambdas.push(o.shape_where(|e| e.value > v || (e.value == v && !e.overlined))?);
        lambdas.push(o.shape_where(|e| e.value >= v)?);
    }
    let word = SignWord::new(vec![Sign::Plus; 2 * l])?;
    InterlacedSeq::new(word, lambdas).map_err(|e| Error::InvalidOverpartition(format!("strips do not interlace: {e}")))
}

/// Inverse of [`overpartition_to_seq`]: each cell takes the value of the step that adds it.
pub fn seq_to_overpartition(s: &InterlacedSeq) -> Result<Overpartition> {
    let w = s.word();
    if w.signs().iter().any(|x| *x != Sign::Plus) || !s.lambda(0).is_empty() {
        return Err(Error::InvalidWord { word: w.to_string(), reason: "needs +^{2l} and an empty start".into() });
    }
    let l = w.half_len();
    let shape = s.lambda(2 * l);
    let mut rows = Vec::with_capacity(shape.len());
    for r in 0..shape.len() {
        let mut row = Vec::new();
        for c in 0..shape.part(r) {
            let m = (1..=2 * l).find(|&m| s.lambda(m).part(r) > c).expect("cell in final shape");
            let i = m.div_ceil(2);
            row.push(OverEntry { value: (l + 1 - i) as u32, overlined: m % 2 == 0 });
        }
        rows.push(row);
    }
    let o = Overpartition { rows };
    o.validate(l)?;
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(value: u32, overlined: bool) -> OverEntry {
        OverEntry { value, overlined }
    }

    pub(crate) fn example() -> Overpartition {
        Overpartition {
            rows: vec![
                vec![e(2, false), e(2, false), e(2, true), e(1, true)],
                vec![e(2, true), e(1, false), e(1, false), e(1, true)],
                vec![e(2, true), e(1, true)],
                vec![e(1, false)],
            ],
        }
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_4421_example() {
        let s = overpartition_to_seq(&example(), 2).unwrap();
        assert_eq!(s.lambdas(), &[p(&[]), p(&[2]), p(&[3, 1, 1]), p(&[3, 3, 1, 1]), p(&[4, 4, 2, 1])]);
        assert_eq!(seq_to_overpartition(&s).unwrap(), example());
    }

    #[test]
    fn column_repeat_must_be_overlined() {
        let mut o = example();
        o.rows[2][0].overlined = false;
        assert!(matches!(overpartition_to_seq(&o, 2), Err(Error::InvalidOverpartition(_))));
    }

    #[test]
    fn empty_overpartition() {
        let s = overpartition_to_seq(&Overpartition { rows: vec![] }, 3).unwrap();
        assert!(s.lambdas().iter().all(Partition::is_empty));
    }

    #[test]
    fn pyramid_relations_match_word() {
        for l in 1..6 {
            assert_eq!(pyramid_relations(l), pyramid_word(l).unwrap().relations());
        }
    }
}

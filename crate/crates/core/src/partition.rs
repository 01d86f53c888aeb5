//! Integer partitions and the four strip relations between them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; `∅` is the empty sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts.into_iter().map(i64::from).collect()))
        }
    }

    /// Accepts trailing zeros and drops them.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `λ_{i+1}` in 0-based indexing; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// `Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p as usize).sum()
    }

    /// Changes part `row` (0-based) by `delta`, returning `None` if the result is not a partition.
    pub fn adjust(&self, row: usize, delta: i64) -> Option<Partition> {
        let mut parts: Vec<i64> = self.0.iter().map(|&p| i64::from(p)).collect();
        if row > parts.len() {
            return None;
        }
        if row == parts.len() {
            parts.push(0);
        }
        parts[row] += delta;
        if parts[row] < 0 {
            return None;
        }
        let parts: Vec<u32> = parts.into_iter().map(|p| p as u32).collect();
        Partition::from_padded(parts).ok()
    }

    /// Cells `(row, col)`, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Hook length of the 1-based cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i - 1) as usize - j;
        let leg = self.0[i..].iter().filter(|&&p| p as usize >= j).count();
        arm + leg + 1
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Partition> {
        if parts.iter().any(|&p| p <= 0 || p > i64::from(u32::MAX)) {
            return Err(Error::InvalidPartition(parts));
        }
        Partition::new(parts.into_iter().map(|p| p as u32).collect())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Order used by every enumeration: size ascending, then parts in decreasing lexicographic order.
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StripRelation {
    /// `μ ≺ λ`: `λ/μ` is a horizontal strip.
    HPlus,
    /// `μ ≻ λ`.
    HMinus,
    /// `μ ≺′ λ`: `λ/μ` is a vertical strip.
    VPlus,
    /// `μ ≻′ λ`.
    VMinus,
}

impl StripRelation {
    pub const ALL: [StripRelation; 4] =
        [StripRelation::HPlus, StripRelation::HMinus, StripRelation::VPlus, StripRelation::VMinus];

    pub fn new(plus: bool, vertical: bool) -> StripRelation {
        match (plus, vertical) {
            (true, false) => StripRelation::HPlus,
            (false, false) => StripRelation::HMinus,
            (true, true) => StripRelation::VPlus,
            (false, true) => StripRelation::VMinus,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, StripRelation::HPlus | StripRelation::VPlus)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, StripRelation::VPlus | StripRelation::VMinus)
    }

    /// The relation with its two arguments swapped.
    pub fn reversed(self) -> StripRelation {
        StripRelation::new(!self.is_plus(), self.is_vertical())
    }

    pub fn symbol(self) -> &'static str {
        match self {
            StripRelation::HPlus => "≺",
            StripRelation::HMinus => "≻",
            StripRelation::VPlus => "≺′",
            StripRelation::VMinus => "≻′",
        }
    }

    /// Wire token: `h+`, `h-`, `v+`, `v-`.
    pub fn token(self) -> &'static str {
        match self {
            StripRelation::HPlus => "h+",
            StripRelation::HMinus => "h-",
            StripRelation::VPlus => "v+",
            StripRelation::VMinus => "v-",
        }
    }

    pub fn from_token(s: &str) -> Result<StripRelation> {
        match s.trim() {
            "h+" | "≺" => Ok(StripRelation::HPlus),
            "h-" | "≻" => Ok(StripRelation::HMinus),
            "v+" | "≺′" | "≺'" => Ok(StripRelation::VPlus),
            "v-" | "≻′" | "≻'" => Ok(StripRelation::VMinus),
            other => Err(Error::Parse(format!("unknown relation token {other:?}"))),
        }
    }
}

impl fmt::Display for StripRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `λ/μ` is a horizontal strip: `λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ …`.
fn horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    (0..n).all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) >= lambda.part(i + 1))
}

/// `λ/μ` is a vertical strip: `0 ≤ λ_i − μ_i ≤ 1` for all `i`.
fn vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    (0..n).all(|i| {
        let (l, m) = (lambda.part(i), mu.part(i));
        l >= m && l - m <= 1
    })
}

pub fn interlaced(mu: &Partition, lambda: &Partition, rel: StripRelation) -> bool {
    match rel {
        StripRelation::HPlus => horizontal_strip(mu, lambda),
        StripRelation::HMinus => horizontal_strip(lambda, mu),
        StripRelation::VPlus => vertical_strip(mu, lambda),
        StripRelation::VMinus => vertical_strip(lambda, mu),
    }
}

/// All `μ` with `interlaced(μ, λ, rel)` and `|μ| ≤ max_size`, in canonical order.
pub fn strip_extensions(lambda: &Partition, rel: StripRelation, max_size: usize) -> Vec<Partition> {
    let mut out = match rel {
        StripRelation::HPlus => horizontal_shrinks(lambda, max_size),
        StripRelation::HMinus => horizontal_grows(lambda, max_size),
        StripRelation::VPlus => {
            horizontal_shrinks(&lambda.conjugate(), max_size).iter().map(Partition::conjugate).collect()
        }
        StripRelation::VMinus => {
            horizontal_grows(&lambda.conjugate(), max_size).iter().map(Partition::conjugate).collect()
        }
    };
    out.sort_by(canonical_cmp);
    out
}

/// `μ ≺ λ`: `μ_i ∈ [λ_{i+1}, λ_i]`.
fn horizontal_shrinks(lambda: &Partition, max_size: usize) -> Vec<Partition> {
    let n = lambda.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(lambda: &Partition, i: usize, size: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if size <= max {
                out.push(Partition::from_padded(cur.clone()).expect("interlacing keeps monotonicity"));
            }
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            if size + v as usize > max {
                break;
            }
            cur.push(v);
            rec(lambda, i + 1, size + v as usize, max, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, 0, max_size, &mut cur, &mut out);
    debug_assert!(out.iter().all(|m| m.len() <= n));
    out
}

/// `λ ≺ μ`: `μ_1 ≥ λ_1` and `μ_i ∈ [λ_i, λ_{i-1}]` for `i ≥ 2`.
fn horizontal_grows(lambda: &Partition, max_size: usize) -> Vec<Partition> {
    let base = lambda.size();
    if base > max_size {
        return Vec::new();
    }
    let slack = max_size - base;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(lambda: &Partition, i: usize, slack: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > lambda.len() {
            out.push(Partition::from_padded(cur.clone()).expect("interlacing keeps monotonicity"));
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { lo + slack as u32 } else { lambda.part(i - 1) };
        for v in lo..=hi {
            let extra = (v - lo) as usize;
            if extra > slack {
                break;
            }
            cur.push(v);
            rec(lambda, i + 1, slack - extra, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 0, slack, &mut cur, &mut out);
    out
}

/// All partitions of exactly `n`, parts in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p as u32);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_padded(vec![2, 0, 0]).unwrap(), p(&[2]));
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaced(&p(&[]), &p(&[3]), StripRelation::HPlus));
        assert!(!interlaced(&p(&[2]), &p(&[1, 1]), StripRelation::HPlus));
        assert!(interlaced(&p(&[1]), &p(&[2, 1]), StripRelation::VPlus));
        assert!(interlaced(&p(&[2, 1]), &p(&[1]), StripRelation::VMinus));
        assert!(!interlaced(&p(&[1]), &p(&[3]), StripRelation::VPlus));
    }

    #[test]
    fn strip_extension_examples() {
        assert_eq!(strip_extensions(&p(&[]), StripRelation::HMinus, 2), vec![p(&[]), p(&[1]), p(&[2])]);
        assert_eq!(strip_extensions(&p(&[]), StripRelation::VMinus, 2), vec![p(&[]), p(&[1]), p(&[1, 1])]);
        assert_eq!(strip_extensions(&p(&[1]), StripRelation::HPlus, 9), vec![p(&[]), p(&[1])]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_up_to(0), vec![p(&[])]);
        assert_eq!(partitions_up_to(2), vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_up_to(10).len(), 139);
    }

    #[test]
    fn hooks_of_staircase() {
        let s = p(&[3, 2, 1]);
        let hooks: Vec<usize> = s.cells().map(|(i, j)| s.hook(i, j)).collect();
        assert_eq!(hooks, vec![5, 3, 1, 3, 1, 1]);
    }

    #[test]
    fn adjust_keeps_shape() {
        assert_eq!(p(&[2, 1]).adjust(1, 1), Some(p(&[2, 2])));
        assert_eq!(p(&[2, 1]).adjust(2, 1), Some(p(&[2, 1, 1])));
        assert_eq!(p(&[2, 2]).adjust(1, 1), None);
        assert_eq!(p(&[2, 2]).adjust(0, -1), None);
        assert_eq!(p(&[1]).adjust(0, -1), Some(p(&[])));
    }

    #[test]
    fn json_is_plain_array() {
        assert_eq!(serde_json::to_string(&p(&[4, 2, 1])).unwrap(), "[4,2,1]");
        assert_eq!(serde_json::from_str::<Partition>("[]").unwrap(), p(&[]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}

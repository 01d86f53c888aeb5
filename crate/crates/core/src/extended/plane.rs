//! Plane partitions as pure sequences for `◊ = ≺^ℓ ≻^ℓ`.

use crate::error::{Error, Result};
use crate::partition::{Partition, StripRelation};

use super::seq::ExtendedSeq;
use super::word::DiamondWord;

/// `≺^ℓ ≻^ℓ`.
pub fn plane_partition_word(l: usize) -> Result<DiamondWord> {
    let mut symbols = vec![StripRelation::HPlus; l];
    symbols.extend(vec![StripRelation::HMinus; l]);
    DiamondWord::new(symbols)
}

/// Diagonal slices `λ^(d) = (π_{r, r+d})_r` for `d = −ℓ, …, ℓ`; rows and columns must fit in `ℓ`.
pub fn plane_partition_adapter(l: usize, array: &[Vec<u32>]) -> Result<ExtendedSeq> {
    let rows: Vec<Vec<u32>> = array
        .iter()
        .map(|r| r.iter().copied().take_while(|&v| v > 0).collect())
        .filter(|r: &Vec<u32>| !r.is_empty())
        .collect();
    for (r, row) in array.iter().enumerate() {
        if row.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPlanePartition(format!("row {} increases", r + 1)));
        }
    }
    for r in 1..array.len() {
        for (c, &v) in array[r].iter().enumerate() {
            if v > array[r - 1].get(c).copied().unwrap_or(0) {
                return Err(Error::InvalidPlanePartition(format!("column {} increases at row {}", c + 1, r + 1)));
            }
        }
    }
    if rows.len() > l || rows.iter().any(|r| r.len() > l) {
        return Err(Error::InvalidPlanePartition(format!("array does not fit in an {l} × {l} square")));
    }
    let at = |r: usize, c: usize| rows.get(r).and_then(|row| row.get(c)).copied().unwrap_or(0);
    let li = l as i64;
    let lambdas = (-li..=li)
        .map(|d| {
            let parts: Vec<u32> = (0..l as i64)
                .filter(|&r| r + d >= 0)
                .map(|r| at(r as usize, (r + d) as usize))
                .take_while(|&v| v > 0)
                .collect();
            Partition::new(parts)
        })
        .collect::<Result<Vec<_>>>()?;
    ExtendedSeq::new(plane_partition_word(l)?, lambdas)
}

/// Inverse of `plane_partition_adapter`.
pub fn plane_partition_array(s: &ExtendedSeq) -> Result<Vec<Vec<u32>>> {
    let k = s.diamond().len();
    let l = k / 2;
    if plane_partition_word(l)? != *s.diamond() || !s.is_pure() {
        return Err(Error::InvalidPlanePartition("needs a pure sequence for ≺^ℓ≻^ℓ".into()));
    }
    let mut array = vec![vec![0u32; l]; l];
    for (idx, lambda) in s.lambdas().iter().enumerate() {
        let d = idx as i64 - l as i64;
        for (r, &v) in lambda.parts().iter().enumerate() {
            let (row, col) = if d >= 0 { (r, r + d as usize) } else { (r + (-d) as usize, r) };
            array[row][col] = v;
        }
    }
    Ok(array
        .into_iter()
        .map(|r| r.into_iter().filter(|&v| v > 0).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect())
}

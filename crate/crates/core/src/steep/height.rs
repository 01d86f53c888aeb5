//! Height functions of steep tilings.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

use super::tiling::{seq_to_tiling, sufficient_half_width, TilingWindow};
use super::word::SignWord;

/// Heights on the vertices `(x, y)` with `0 ≤ x − y ≤ 2ℓ` and `|x| ≤ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightField {
    word: SignWord,
    half_width: i64,
    charges: Vec<i64>,
    offsets: Vec<i64>,
    values: BTreeMap<(i64, i64), i64>,
}

/// `h_0 = 0`, `h_m = h_{m−1} − w_m`.
pub fn height_offsets(w: &SignWord) -> Vec<i64> {
    let mut h = vec![0];
    for m in 1..=w.len() {
        h.push(h[m - 1] - w.sign(m).value());
    }
    h
}

/// Neighbours of `v` along lattice edges whose two adjacent squares both lie in the window,
/// with the height increment from `v`.
fn steps(t: &TilingWindow, v: (i64, i64)) -> Vec<((i64, i64), i64)> {
    let (x, y) = v;
    let odd = (x - y).rem_euclid(2) == 1;
    let same = |p: (i64, i64), q: (i64, i64)| match (t.domino_at(p), t.domino_at(q)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    let mut out = Vec::with_capacity(4);
    // Horizontal edges run from odd to even vertices; vertical ones from even to odd.
    let horizontal = [((x, y), (x + 1, y)), ((x - 1, y), (x, y))];
    for (l, r) in horizontal {
        let (above, below) = ((l.0, l.1), (l.0, l.1 - 1));
        if !t.in_window(above) || !t.in_window(below) {
            continue;
        }
        let diff = if same(above, below) { -3 } else { 1 };
        let other = if l == v { r } else { l };
        out.push((other, if odd { diff } else { -diff }));
    }
    let vertical = [((x, y), (x, y + 1)), ((x, y - 1), (x, y))];
    for (b, a) in vertical {
        let (left, right) = ((b.0 - 1, b.1), (b.0, b.1));
        if !t.in_window(left) || !t.in_window(right) {
            continue;
        }
        let diff = if same(left, right) { -3 } else { 1 };
        let other = if b == v { a } else { b };
        out.push((other, if odd { -diff } else { diff }));
    }
    out
}

/// Integrates the edge increments of `t`; the far vertex `(A, A − 1)` is pinned to `H_min`.
fn integrate(t: &TilingWindow) -> Result<BTreeMap<(i64, i64), i64>> {
    let a = t.half_width();
    let w = t.word();
    let charges = w.charges();
    let offsets = height_offsets(w);
    let root = (a, a - 1);
    let mut values = BTreeMap::new();
    values.insert(root, 2 * (a - charges[1]).abs() + offsets[1]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let h = values[&v];
        for (u, d) in steps(t, v) {
            match values.get(&u) {
                Some(&hu) if hu != h + d => {
                    return Err(Error::MalformedTiling(format!("height is inconsistent at {u:?}")));
                }
                Some(_) => {}
                None => {
                    values.insert(u, h + d);
                    queue.push_back(u);
                }
            }
        }
    }
    Ok(values)
}

/// Height function of `t`, computed on a window wide enough to reach the frozen region and
/// restricted back to the window of `t`.
pub fn height_function(t: &TilingWindow) -> Result<HeightField> {
    let s = t.to_seq()?;
    let a = t.half_width();
    let wide = seq_to_tiling(&s, a.max(sufficient_half_width(&s)))?;
    let all = integrate(&wide)?;
    let two_l = t.word().len() as i64;
    let values = all.into_iter().filter(|&((x, y), _)| x.abs() <= a && x - y >= 0 && x - y <= two_l).collect();
    Ok(HeightField {
        word: t.word().clone(),
        half_width: a,
        charges: t.word().charges(),
        offsets: height_offsets(t.word()),
        values,
    })
}

impl HeightField {
    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn get(&self, x: i64, y: i64) -> Option<i64> {
        self.values.get(&(x, y)).copied()
    }

    pub fn values(&self) -> &BTreeMap<(i64, i64), i64> {
        &self.values
    }

    /// Height of the minimal tiling: `2|x − c_m| + h_m` at `(x, x − m)`.
    pub fn min_value(&self, x: i64, y: i64) -> i64 {
        let m = (x - y) as usize;
        2 * (x - self.charges[m]).abs() + self.offsets[m]
    }

    /// `Σ |H − H_min| / 4` on each diagonal `m = x − y`.
    pub fn per_diagonal_excess(&self) -> Vec<usize> {
        let mut out = vec![0i64; self.word.len() + 1];
        for (&(x, y), &h) in &self.values {
            out[(x - y) as usize] += (h - self.min_value(x, y)).abs();
        }
        out.into_iter().map(|e| (e / 4) as usize).collect()
    }

    /// `Σ_V |H − H_min| / 4`.
    pub fn flip_distance(&self) -> usize {
        self.per_diagonal_excess().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steep::tiling::minimal_tiling;

    #[test]
    fn minimal_tiling_has_minimal_height() {
        for w in SignWord::all_up_to(6) {
            let a = w.charges().iter().map(|c| c.abs()).max().unwrap() + 2;
            let hf = height_function(&minimal_tiling(&w, a).unwrap()).unwrap();
            for (&(x, y), &h) in hf.values() {
                assert_eq!(h, hf.min_value(x, y), "{w} at ({x}, {y})");
            }
            assert_eq!(hf.get(0, 0), Some(0));
        }
    }
}

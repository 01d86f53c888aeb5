//! Finite windows on steep tilings: the fundamental bijection between tilings and sequences.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maya::MayaDiagram;
use crate::partition::Partition;
use crate::Half;

use super::seq::{BoundaryMode, InterlacedSeq};
use super::word::{Sign, SignWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orient {
    #[serde(rename = "h")]
    H,
    #[serde(rename = "v")]
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Going {
    N,
    E,
    S,
    W,
}

impl Going {
    /// North- and east-going dominos cover empty sites.
    pub fn covers_empty(self) -> bool {
        matches!(self, Going::N | Going::E)
    }
}

/// A domino given by the top-left corner of its bounding box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub x: i64,
    pub y: i64,
    pub orient: Orient,
    pub going: Going,
}

impl Domino {
    /// Going-type from the parity of the top-left corner.
    pub fn new(x: i64, y: i64, orient: Orient) -> Domino {
        let odd = (x + y).rem_euclid(2) == 1;
        let going = match (orient, odd) {
            (Orient::H, true) => Going::N,
            (Orient::H, false) => Going::S,
            (Orient::V, true) => Going::E,
            (Orient::V, false) => Going::W,
        };
        Domino { x, y, orient, going }
    }

    /// Domino whose upper-left unit square has lower-left corner `(a, b)`.
    fn from_first_square(a: i64, b: i64, orient: Orient) -> Domino {
        Domino::new(a, b + 1, orient)
    }

    /// Lower-left corners of the two unit squares; the first is the upper-left one.
    pub fn squares(&self) -> [(i64, i64); 2] {
        let first = (self.x, self.y - 1);
        match self.orient {
            Orient::H => [first, (self.x + 1, self.y - 1)],
            Orient::V => [first, (self.x, self.y - 2)],
        }
    }
}

/// Diagonal index `m = a − b` of the unit square with lower-left corner `(a, b)`.
fn diag(sq: (i64, i64)) -> i64 {
    sq.0 - sq.1
}

/// Tiling of the strip `0 ≤ x − y ≤ 2ℓ` restricted to square centers with `|x| < A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WindowWire", into = "WindowWire")]
pub struct TilingWindow {
    word: SignWord,
    half_width: i64,
    dominos: Vec<Domino>,
    cover: HashMap<(i64, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct WindowWire {
    word: SignWord,
    half_width: i64,
    dominos: Vec<Domino>,
}

impl TryFrom<WindowWire> for TilingWindow {
    type Error = Error;
    fn try_from(w: WindowWire) -> Result<TilingWindow> {
        for d in &w.dominos {
            if Domino::new(d.x, d.y, d.orient) != *d {
                return Err(Error::MalformedTiling(format!("domino at ({}, {}) has the wrong going-type", d.x, d.y)));
            }
        }
        TilingWindow::from_dominos(w.word, w.half_width, w.dominos)
    }
}

impl From<TilingWindow> for WindowWire {
    fn from(t: TilingWindow) -> WindowWire {
        WindowWire { word: t.word, half_width: t.half_width, dominos: t.dominos }
    }
}

/// A tiling flip with its diagonal and direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingFlip {
    pub diagonal: usize,
    pub ascendent: bool,
    pub result: TilingWindow,
}

/// Smallest half-width whose exterior is frozen for `s`.
fn frozen_half_width(s: &InterlacedSeq) -> i64 {
    (0..=s.word().len())
        .map(|m| {
            let maya = s.maya(m);
            let up = (maya.top() + Half::HALF).to_int().expect("integer charge");
            let down = (Half::HALF - maya.bottom()).to_int().expect("integer charge");
            up.max(down)
        })
        .max()
        .unwrap_or(0)
        .max(1)
}

/// Half-width that shows `s` together with its asymptotic patterns at both ends.
pub fn sufficient_half_width(s: &InterlacedSeq) -> i64 {
    frozen_half_width(s) + 1
}

impl TilingWindow {
    /// Validates geometry and coverage, then checks the tiling against its own sequence.
    pub fn from_dominos(word: SignWord, half_width: i64, mut dominos: Vec<Domino>) -> Result<TilingWindow> {
        dominos.sort();
        dominos.dedup();
        let mut cover = HashMap::new();
        let two_l = word.len() as i64;
        for (i, d) in dominos.iter().enumerate() {
            let [s0, s1] = d.squares();
            let m = diag(s0);
            if m < 0 || diag(s1) > two_l {
                return Err(Error::MalformedTiling(format!("domino at ({}, {}) leaves the strip", d.x, d.y)));
            }
            let pairs_empty = m % 2 == 0;
            if pairs_empty != d.going.covers_empty() {
                return Err(Error::MalformedTiling(format!("domino at ({}, {}) has an impossible type", d.x, d.y)));
            }
            for sq in [s0, s1] {
                if cover.insert(sq, i).is_some() {
                    return Err(Error::MalformedTiling(format!("square {sq:?} covered twice")));
                }
            }
        }
        let t = TilingWindow { word, half_width, dominos, cover };
        for sq in t.window_squares() {
            let m = diag(sq);
            if !t.cover.contains_key(&sq) && m != 0 && m != two_l {
                return Err(Error::MalformedTiling(format!("square {sq:?} is not covered")));
            }
        }
        let s = t.to_seq_unchecked()?;
        let again = seq_to_tiling(&s, half_width)?;
        if again.dominos != t.dominos {
            return Err(Error::MalformedTiling("dominos disagree with the periodic continuation".into()));
        }
        Ok(t)
    }

    pub fn word(&self) -> &SignWord {
        &self.word
    }

    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    pub fn dominos(&self) -> &[Domino] {
        &self.dominos
    }

    pub fn domino_at(&self, sq: (i64, i64)) -> Option<&Domino> {
        self.cover.get(&sq).map(|&i| &self.dominos[i])
    }

    /// Unit squares of the strip with center abscissa in `(−A, A)`.
    pub fn window_squares(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let a = self.half_width;
        (0..=self.word.len() as i64).flat_map(move |m| (-a..a).map(move |x| (x, x - m)))
    }

    pub fn in_window(&self, sq: (i64, i64)) -> bool {
        let m = diag(sq);
        m >= 0 && m <= self.word.len() as i64 && sq.0 >= -self.half_width && sq.0 < self.half_width
    }

    /// Occupied: covered by a south/west-going domino, or uncovered on the upper rim.
    pub fn is_occupied(&self, sq: (i64, i64)) -> Result<bool> {
        if sq.0 >= self.half_width {
            return Ok(false);
        }
        if sq.0 < -self.half_width {
            return Ok(true);
        }
        match self.domino_at(sq) {
            Some(d) => Ok(!d.going.covers_empty()),
            None if diag(sq) == 0 => Ok(true),
            None if diag(sq) == self.word.len() as i64 => Ok(false),
            None => Err(Error::MalformedTiling(format!("gap at {sq:?}"))),
        }
    }

    fn to_seq_unchecked(&self) -> Result<InterlacedSeq> {
        let charges = self.word.charges();
        let mut lambdas = Vec::with_capacity(charges.len());
        for (m, &c) in charges.iter().enumerate() {
            let m = m as i64;
            let a = self.half_width;
            let occupied = |x: Half| {
                let left = x.floor();
                self.is_occupied((left, left - m)).unwrap_or(false)
            };
            for x in -a..a {
                self.is_occupied((x, x - m))?;
            }
            let maya = MayaDiagram::from_sites(Half::HALF, Half::int(-a), Half::int(a), occupied)?;
            if maya.charge != Half::int(c) {
                return Err(Error::MalformedTiling(format!("diagonal {m} has charge {} instead of {c}", maya.charge)));
            }
            lambdas.push(maya.partition);
        }
        InterlacedSeq::new(self.word.clone(), lambdas)
    }

    /// Reads the particle configuration of every diagonal.
    pub fn to_seq(&self) -> Result<InterlacedSeq> {
        self.to_seq_unchecked()
    }

    /// Recovers `w` from the dominos covering the extreme sites of each odd diagonal.
    pub fn asymptotic_data(&self) -> Result<SignWord> {
        let a = self.half_width;
        let narrow = || Error::WindowTooSmall { given: a, needed: a + 1 };
        let mut signs = Vec::with_capacity(self.word.len());
        for k in 1..=self.word.half_len() as i64 {
            let m = 2 * k - 1;
            let far = self.domino_at((a - 1, a - 1 - m)).ok_or_else(narrow)?;
            signs.push(match far.going {
                Going::N => Sign::Plus,
                Going::E => Sign::Minus,
                _ => return Err(narrow()),
            });
            let near = self.domino_at((-a, -a - m)).ok_or_else(narrow)?;
            signs.push(match near.going {
                Going::W => Sign::Plus,
                Going::S => Sign::Minus,
                _ => return Err(narrow()),
            });
        }
        SignWord::new(signs)
    }

    fn with_dominos(&self, dominos: Vec<Domino>) -> TilingWindow {
        let mut dominos = dominos;
        dominos.sort();
        let cover =
            dominos.iter().enumerate().flat_map(|(i, d)| d.squares().into_iter().map(move |sq| (sq, i))).collect();
        TilingWindow { word: self.word.clone(), half_width: self.half_width, dominos, cover }
    }

    fn replace(&self, remove: &[usize], add: &[Domino]) -> TilingWindow {
        let mut ds: Vec<Domino> =
            self.dominos.iter().enumerate().filter(|(i, _)| !remove.contains(i)).map(|(_, d)| *d).collect();
        ds.extend_from_slice(add);
        self.with_dominos(ds)
    }

    /// Every flip whose squares lie in the window, in a deterministic order.
    pub fn flips(&self, mode: BoundaryMode) -> Result<Vec<TilingFlip>> {
        if mode == BoundaryMode::Periodic {
            return Err(Error::Unsupported("periodic flips act on sequences only".into()));
        }
        let two_l = self.word.len() as i64;
        let mut out = Vec::new();
        for (i, d) in self.dominos.iter().enumerate() {
            let (x, y) = (d.x, d.y);
            let partner = match d.orient {
                Orient::H => self.cover.get(&(x, y - 2)),
                Orient::V => self.cover.get(&(x + 1, y - 1)),
            };
            let Some(&j) = partner else { continue };
            let e = self.dominos[j];
            let block = match d.orient {
                Orient::H => e.orient == Orient::H && (e.x, e.y) == (x, y - 1),
                Orient::V => e.orient == Orient::V && (e.x, e.y) == (x + 1, y),
            };
            let inside = d.squares().iter().chain(e.squares().iter()).all(|&sq| self.in_window(sq));
            if !block || !inside {
                continue;
            }
            let k = x - y + 2;
            let (add, ascendent) = match d.orient {
                Orient::H => ([Domino::new(x, y, Orient::V), Domino::new(x + 1, y, Orient::V)], k % 2 == 1),
                Orient::V => ([Domino::new(x, y, Orient::H), Domino::new(x, y - 1, Orient::H)], k % 2 == 0),
            };
            out.push(TilingFlip { diagonal: k as usize, ascendent, result: self.replace(&[i, j], &add) });
        }
        let free_left = mode == BoundaryMode::Free;
        let free_right = matches!(mode, BoundaryMode::Free | BoundaryMode::Mixed);
        for (i, d) in self.dominos.iter().enumerate() {
            let [s0, s1] = d.squares();
            if free_left && diag(s0) == 0 {
                let (other, orient, ascendent) = match d.orient {
                    Orient::H => ((s1.0, s1.1 + 1), Orient::V, false),
                    Orient::V => ((s1.0 - 1, s1.1), Orient::H, true),
                };
                if self.in_window(other) && self.in_window(s0) && !self.cover.contains_key(&other) {
                    let nd = Domino::from_first_square(other.0, other.1, orient);
                    out.push(TilingFlip { diagonal: 0, ascendent, result: self.replace(&[i], &[nd]) });
                }
            }
            if free_right && diag(s1) == two_l {
                let (other, orient, ascendent) = match d.orient {
                    Orient::H => ((s0.0, s0.1 - 1), Orient::V, false),
                    Orient::V => ((s0.0 + 1, s0.1), Orient::H, true),
                };
                if self.in_window(other) && self.in_window(s1) && !self.cover.contains_key(&other) {
                    let nd = Domino::from_first_square(s0.0, s0.1, orient);
                    out.push(TilingFlip { diagonal: two_l as usize, ascendent, result: self.replace(&[i], &[nd]) });
                }
            }
        }
        Ok(out)
    }
}

/// Pairs the `n`-th sites of two adjacent diagonals into dominos.
fn pair_diagonals(
    first: &MayaDiagram,
    second: &MayaDiagram,
    m: i64,
    empty: bool,
    a: i64,
    out: &mut Vec<Domino>,
) -> Result<()> {
    for n in 1.. {
        let (x1, x2) = if empty { (first.hole(n), second.hole(n)) } else { (first.position(n), second.position(n)) };
        let outside = if empty { x1.min(x2) > Half::int(a) } else { x1.max(x2) < Half::int(-a) };
        if outside {
            break;
        }
        let orient = match (x2 - x1).twice() {
            0 => Orient::V,
            2 => Orient::H,
            _ => return Err(Error::MalformedTiling(format!("sites on diagonals {m} and {} do not pair", m + 1))),
        };
        let left = x1.floor();
        out.push(Domino::from_first_square(left, left - m, orient));
    }
    Ok(())
}

/// Builds the window of half-width `a` for the tiling encoded by `s`.
pub fn seq_to_tiling(s: &InterlacedSeq, a: i64) -> Result<TilingWindow> {
    let needed = frozen_half_width(s);
    if a < needed {
        return Err(Error::WindowTooSmall { given: a, needed });
    }
    let two_l = s.word().len();
    let mayas: Vec<MayaDiagram> = (0..=two_l).map(|m| s.maya(m)).collect();
    let mut dominos = Vec::new();
    for k in 1..=two_l / 2 {
        pair_diagonals(&mayas[2 * k - 2], &mayas[2 * k - 1], (2 * k - 2) as i64, true, a, &mut dominos)?;
        pair_diagonals(&mayas[2 * k - 1], &mayas[2 * k], (2 * k - 1) as i64, false, a, &mut dominos)?;
    }
    let t = TilingWindow { word: s.word().clone(), half_width: a, dominos: Vec::new(), cover: HashMap::new() };
    let visible: Vec<Domino> = dominos.into_iter().filter(|d| d.squares().iter().any(|&sq| t.in_window(sq))).collect();
    Ok(t.with_dominos(visible))
}

/// The tiling whose sequence is all-empty.
pub fn minimal_tiling(w: &SignWord, a: i64) -> Result<TilingWindow> {
    seq_to_tiling(&InterlacedSeq::empty(w), a)
}

/// `P_m = (c_m, c_m − m)` computed from the alternating sum `(m − Σ_{j≤m} (−1)^j w_j)/2`.
pub fn frontier_point(w: &SignWord, m: usize) -> (i64, i64) {
    let s: i64 = (1..=m).map(|j| if j % 2 == 0 { 1 } else { -1 } * w.sign(j).value()).sum();
    let x = (m as i64 - s) / 2;
    (x, x - m as i64)
}

/// Partitions of an all-empty sequence.
pub fn empty_partitions(w: &SignWord) -> Vec<Partition> {
    vec![Partition::empty(); w.len() + 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_roundtrip_and_word() {
        for word in SignWord::all_up_to(6) {
            let a = word.charges().iter().map(|c| c.abs()).max().unwrap() + 1;
            let t = minimal_tiling(&word, a).unwrap();
            assert!(t.to_seq().unwrap().lambdas().iter().all(Partition::is_empty));
            assert_eq!(t.asymptotic_data().unwrap(), word);
        }
    }

    #[test]
    fn aztec_minimal_is_horizontal() {
        let t = minimal_tiling(&w("+-+-+-+-"), 9).unwrap();
        assert!(t.dominos().iter().all(|d| d.orient == Orient::H));
    }

    #[test]
    fn frontier_matches_charges() {
        for word in SignWord::all_up_to(8) {
            let c = word.charges();
            for (m, &cm) in c.iter().enumerate() {
                assert_eq!(frontier_point(&word, m), (cm, cm - m as i64));
            }
        }
    }

    #[test]
    fn too_small_window() {
        assert!(matches!(minimal_tiling(&w("+++++---++"), 5), Err(Error::WindowTooSmall { .. })));
        assert!(minimal_tiling(&w("+++++---++"), 6).is_ok());
    }

    #[test]
    fn gap_is_rejected() {
        let t = minimal_tiling(&w("+-"), 3).unwrap();
        let mut ds = t.dominos().to_vec();
        ds.remove(ds.len() / 2);
        assert!(TilingWindow::from_dominos(w("+-"), 3, ds).is_err());
    }
}

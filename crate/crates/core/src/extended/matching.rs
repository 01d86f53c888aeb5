use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;
use crate::maya::MayaDiagram;
use crate::steep::FlipDir;

use super::geometry::{build_geometry, ColumnGeometry, Edge, Vertex};
use super::seq::ExtendedSeq;
use super::word::DiamondWord;

/// The part of an admissible matching with ordinates in `[−A, A]`: every matched edge with an
/// endpoint in that band. Outside it, columns `V_j` are matched to the left below `Y` and to the
/// right above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingWindow {
    geometry: ColumnGeometry,
    half_height: i64,
    edges: BTreeSet<Edge>,
}

/// A bounded face, identified by its two vertices `V_j(y)` and `V_j(y + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub j: usize,
    pub y: Half,
}

/// A flip: the particle of `V_j` between `y` and `y + 1` jumps up or down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtFlip {
    pub face: Face,
    pub dir: FlipDir,
}

impl ExtFlip {
    /// `3j/2`.
    pub fn abscissa(&self) -> Half {
        Half::from_twice(3 * self.face.j as i64)
    }
}

/// Smallest `A` for which `psi_inverse(s, A)` keeps a margin of two rows around every particle
/// that left its ground state.
pub fn sufficient_half_height(s: &ExtendedSeq) -> i64 {
    let g = build_geometry(s.diamond());
    let mut need = 0;
    for (j, lambda) in s.lambdas().iter().enumerate() {
        let m = MayaDiagram::new(lambda.clone(), g.y_zero(j));
        need = need.max(m.top().abs().floor() + 1).max(m.bottom().abs().floor() + 1);
    }
    need + 2
}

fn hole_rank(m: &MayaDiagram, y: Half) -> usize {
    (1..).find(|&n| m.hole(n) == y).expect("site is empty")
}

fn particle_rank(m: &MayaDiagram, y: Half) -> usize {
    (1..).find(|&n| m.position(n) == y).expect("site is occupied")
}

/// The unique admissible matching whose left-matched vertices of `V_j` form the Maya diagram of
/// `λ^(j)` with charge `Y(x_{2j})`.
pub fn psi_inverse(s: &ExtendedSeq, half_height: i64) -> Result<MatchingWindow> {
    let needed = sufficient_half_height(s);
    if half_height < needed {
        return Err(Error::WindowTooSmall { given: half_height, needed });
    }
    let g = build_geometry(s.diamond());
    let k = g.k();
    let mayas: Vec<MayaDiagram> =
        s.lambdas().iter().enumerate().map(|(j, l)| MayaDiagram::new(l.clone(), g.y_zero(j))).collect();
    let (lo, hi) = (Half::int(-half_height), Half::int(half_height));
    let in_band = |v: Vertex| v.y >= lo && v.y <= hi;
    let mut edges = BTreeSet::new();
    for j in 1..=k {
        let col = 2 * j - 1;
        let rel = g.word.symbol(j);
        for y in g.ordinates(col, lo - 1, hi + 1) {
            let w = Vertex::new(col, y);
            let partner = if !rel.is_vertical() {
                if mayas[j].is_occupied(y) {
                    Vertex::new(2 * j, y)
                } else {
                    let y2 = mayas[j - 1].hole(hole_rank(&mayas[j], y));
                    if (y2 - y).abs() != Half::HALF {
                        return Err(Error::Interlacing { relation: rel, step: j });
                    }
                    Vertex::new(2 * j - 2, y2)
                }
            } else if !mayas[j - 1].is_occupied(y) {
                Vertex::new(2 * j - 2, y)
            } else {
                let y2 = mayas[j].position(particle_rank(&mayas[j - 1], y));
                if (y2 - y).abs() != Half::HALF {
                    return Err(Error::Interlacing { relation: rel, step: j });
                }
                Vertex::new(2 * j, y2)
            };
            let e = Edge::between(w, partner).expect("consecutive columns");
            if in_band(e.left) || in_band(e.right) {
                edges.insert(e);
            }
        }
    }
    Ok(MatchingWindow { geometry: g, half_height, edges })
}

/// `psi_inverse` of the all-empty sequence.
pub fn minimal_matching(diamond: &DiamondWord, half_height: i64) -> Result<MatchingWindow> {
    psi_inverse(&ExtendedSeq::empty(diamond), half_height)
}

impl MatchingWindow {
    /// Validates coverage inside the band and admissibility.
    pub fn from_edges(diamond: &DiamondWord, half_height: i64, edges: BTreeSet<Edge>) -> Result<MatchingWindow> {
        let g = build_geometry(diamond);
        let m = MatchingWindow { geometry: g, half_height, edges };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.geometry;
        let mut count: BTreeMap<Vertex, usize> = BTreeMap::new();
        for e in &self.edges {
            if !g.is_edge(e) {
                return Err(Error::MalformedMatching(format!("{e:?} is not an edge of the graph")));
            }
            if !self.in_band(e.left) && !self.in_band(e.right) {
                return Err(Error::MalformedMatching(format!("{e:?} lies outside the window")));
            }
            *count.entry(e.left).or_default() += 1;
            *count.entry(e.right).or_default() += 1;
        }
        let last = g.columns() - 1;
        for col in 0..=last {
            for y in g.ordinates(col, self.lo(), self.hi()) {
                let c = count.get(&Vertex::new(col, y)).copied().unwrap_or(0);
                let ok = if col == 0 || col == last { c <= 1 } else { c == 1 };
                if !ok {
                    return Err(Error::MalformedMatching(format!("vertex ({col}, {y}) is covered {c} times")));
                }
            }
        }
        self.psi().map(|_| ())
    }

    pub fn geometry(&self) -> &ColumnGeometry {
        &self.geometry
    }

    pub fn diamond(&self) -> &DiamondWord {
        &self.geometry.word
    }

    pub fn half_height(&self) -> i64 {
        self.half_height
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    fn lo(&self) -> Half {
        Half::int(-self.half_height)
    }

    fn hi(&self) -> Half {
        Half::int(self.half_height)
    }

    fn in_band(&self, v: Vertex) -> bool {
        v.y >= self.lo() && v.y <= self.hi()
    }

    fn mate(&self, v: Vertex) -> Option<Vertex> {
        let steps = [-Half::HALF, Half::ZERO, Half::HALF];
        let left = (v.col > 0)
            .then(|| {
                steps
                    .iter()
                    .map(|&dy| Edge { left: Vertex::new(v.col - 1, v.y + dy), right: v })
                    .find(|e| self.edges.contains(e))
            })
            .flatten();
        left.or_else(|| {
            steps
                .iter()
                .map(|&dy| Edge { left: v, right: Vertex::new(v.col + 1, v.y + dy) })
                .find(|e| self.edges.contains(e))
        })
        .map(|e| e.other(v))
    }

    /// Whether `v ∈ V_j` is matched to the left, an uncovered vertex of `V_0` (resp. `V_k`)
    /// counting as matched to the left (resp. right).
    pub fn left_matched(&self, v: Vertex) -> bool {
        match self.mate(v) {
            Some(u) => u.col < v.col,
            None => v.col == 0,
        }
    }

    /// The partitions read off the columns `V_j`.
    pub fn psi(&self) -> Result<ExtendedSeq> {
        let g = &self.geometry;
        let (lo, hi) = (self.lo(), self.hi());
        let mut lambdas = Vec::with_capacity(g.k() + 1);
        for j in 0..=g.k() {
            let col = 2 * j;
            let ys = g.ordinates(col, lo, hi);
            let (first, last) = (ys[0], ys[ys.len() - 1]);
            if !self.left_matched(Vertex::new(col, first)) || self.left_matched(Vertex::new(col, last)) {
                return Err(Error::MalformedMatching(format!("column V_{j} is not settled at the window edges")));
            }
            let occupied = |y: Half| y < lo || (y <= hi && self.left_matched(Vertex::new(col, y)));
            let m = MayaDiagram::from_sites(g.offset(col), lo, hi, occupied)?;
            if m.charge != g.y_zero(j) {
                return Err(Error::MalformedMatching(format!(
                    "not admissible: column V_{j} is balanced at {} instead of {}",
                    m.charge,
                    g.y_zero(j)
                )));
            }
            lambdas.push(m.partition);
        }
        ExtendedSeq::new(g.word.clone(), lambdas)
    }

    /// The boundary of `face`, starting at `V_j(y)` and going up its left side.
    pub fn face_cycle(&self, face: Face) -> Vec<Vertex> {
        let g = &self.geometry;
        let Face { j, y } = face;
        let c = 2 * j;
        let (v0, v1) = (Vertex::new(c, y), Vertex::new(c, y + 1));
        let up = y + Half::HALF;
        let mut cyc = vec![v0];
        if g.word.symbol(j).is_vertical() {
            cyc.push(Vertex::new(c - 1, up));
        } else {
            cyc.extend([Vertex::new(c - 1, y), Vertex::new(c - 2, up), Vertex::new(c - 1, y + 1)]);
        }
        cyc.push(v1);
        if g.word.symbol(j + 1).is_vertical() {
            cyc.extend([Vertex::new(c + 1, y + 1), Vertex::new(c + 2, up), Vertex::new(c + 1, y)]);
        } else {
            cyc.push(Vertex::new(c + 1, up));
        }
        cyc
    }

    fn cycle_edges(&self, face: Face) -> Vec<Edge> {
        let cyc = self.face_cycle(face);
        (0..cyc.len())
            .map(|t| Edge::between(cyc[t], cyc[(t + 1) % cyc.len()]).expect("face edges join consecutive columns"))
            .collect()
    }

    /// Bounded faces lying inside the window, by `j` then `y`.
    pub fn faces(&self) -> Vec<Face> {
        let g = &self.geometry;
        let mut out = Vec::new();
        for j in 1..g.k() {
            for y in g.ordinates(2 * j, self.lo(), self.hi() - 1) {
                let f = Face { j, y };
                if self.face_cycle(f).iter().all(|&v| self.in_band(v)) {
                    out.push(f);
                }
            }
        }
        out
    }

    /// The face alternates between matched and unmatched edges.
    pub fn is_flippable(&self, face: Face) -> bool {
        let es = self.cycle_edges(face);
        let m: Vec<bool> = es.iter().map(|e| self.edges.contains(e)).collect();
        (0..m.len()).all(|t| m[t] != m[(t + 1) % m.len()])
    }

    pub fn flip(&self, face: Face) -> Result<(ExtFlip, MatchingWindow)> {
        if face.j == 0 || face.j >= self.geometry.k() || !self.face_cycle(face).iter().all(|&v| self.in_band(v)) {
            return Err(Error::InvalidFlip(format!("no bounded face at j = {}, y = {} in the window", face.j, face.y)));
        }
        if !self.is_flippable(face) {
            return Err(Error::InvalidFlip(format!("face at j = {}, y = {} does not alternate", face.j, face.y)));
        }
        let dir = if self.left_matched(Vertex::new(2 * face.j, face.y)) { FlipDir::Up } else { FlipDir::Down };
        let mut edges = self.edges.clone();
        for e in self.cycle_edges(face) {
            if !edges.remove(&e) {
                edges.insert(e);
            }
        }
        let next = MatchingWindow { geometry: self.geometry.clone(), half_height: self.half_height, edges };
        Ok((ExtFlip { face, dir }, next))
    }

    /// Every flippable face in the window, with its flip.
    pub fn flips(&self) -> Vec<(ExtFlip, MatchingWindow)> {
        self.faces().into_iter().filter(|&f| self.is_flippable(f)).map(|f| self.flip(f).expect("flippable")).collect()
    }
}

use serde::{Deserialize, Serialize};

use crate::half::Half;

use super::word::DiamondWord;

/// A vertex of `G_◊`: column `c` is `V_{c/2}` for even `c` and `W_{(c+1)/2}` for odd `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub col: usize,
    pub y: Half,
}

impl Vertex {
    pub fn new(col: usize, y: Half) -> Vertex {
        Vertex { col, y }
    }
}

/// An edge between consecutive columns, stored left endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub left: Vertex,
    pub right: Vertex,
}

impl Edge {
    /// Orders the endpoints; `None` unless they sit in consecutive columns.
    pub fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        if a.col + 1 == b.col {
            Some(Edge { left: a, right: b })
        } else if b.col + 1 == a.col {
            Some(Edge { left: b, right: a })
        } else {
            None
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.left == v || self.right == v
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if self.left == v {
            self.right
        } else {
            self.left
        }
    }
}

/// Column abscissas `x_0 < ⋯ < x_{2k}` of `V_0, W_1, V_1, …, W_k, V_k` and the zero ordinates `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnGeometry {
    pub word: DiamondWord,
    pub abscissas: Vec<Half>,
    pub zero: Vec<Half>,
}

pub fn build_geometry(word: &DiamondWord) -> ColumnGeometry {
    let k = word.len();
    let mut abscissas = vec![Half::ZERO];
    let mut zero = vec![Half::ZERO];
    for i in 1..=k {
        let s = word.symbol(i);
        let three_i = 3 * i as i64;
        abscissas.push(Half::from_twice(if s.is_vertical() { three_i - 1 } else { three_i - 2 }));
        abscissas.push(Half::from_twice(three_i));
        let prev = zero[2 * i - 2];
        // up for ≺ and ≻′, down for ≺′ and ≻
        let next = if s.is_plus() != s.is_vertical() { prev + Half::HALF } else { prev - Half::HALF };
        zero.push(if s.is_vertical() { prev } else { next });
        zero.push(next);
    }
    ColumnGeometry { word: word.clone(), abscissas, zero }
}

impl ColumnGeometry {
    pub fn k(&self) -> usize {
        self.word.len()
    }

    pub fn columns(&self) -> usize {
        self.abscissas.len()
    }

    /// `Y(x_{2j})`, the zero ordinate of `V_j`.
    pub fn y_zero(&self, j: usize) -> Half {
        self.zero[2 * j]
    }

    /// Column `c` holds ordinates in `ℤ + offset(c)`.
    pub fn offset(&self, col: usize) -> Half {
        let twice = if col.is_multiple_of(2) {
            col / 2 + 1
        } else {
            let j = col.div_ceil(2);
            if self.word.symbol(j).is_vertical() {
                j
            } else {
                j + 1
            }
        };
        Half::from_twice((twice % 2) as i64)
    }

    pub fn on_lattice(&self, v: Vertex) -> bool {
        v.col < self.columns() && v.y.same_lattice(self.offset(v.col))
    }

    /// Lattice ordinates of column `col` in `[lo, hi]`, increasing.
    pub fn ordinates(&self, col: usize, lo: Half, hi: Half) -> Vec<Half> {
        let off = self.offset(col);
        let mut y = off + (lo - off).floor();
        if y < lo {
            y = y + 1;
        }
        let mut out = Vec::new();
        while y <= hi {
            out.push(y);
            y = y + 1;
        }
        out
    }

    /// Edges join vertices of consecutive columns differing by `(1, 0)` or `(½, ±½)`.
    pub fn is_edge(&self, e: &Edge) -> bool {
        if !self.on_lattice(e.left) || !self.on_lattice(e.right) || e.left.col + 1 != e.right.col {
            return false;
        }
        let dx = self.abscissas[e.right.col] - self.abscissas[e.left.col];
        let dy = (e.right.y - e.left.y).abs();
        (dx == Half::ONE && dy == Half::ZERO) || (dx == Half::HALF && dy == Half::HALF)
    }

    /// Neighbours of `v` in `G_◊`.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut consider = |c: usize| {
            for dy in [-Half::HALF, Half::ZERO, Half::HALF] {
                let u = Vertex::new(c, v.y + dy);
                if let Some(e) = Edge::between(v, u) {
                    if self.is_edge(&e) {
                        out.push(u);
                    }
                }
            }
        };
        if v.col > 0 {
            consider(v.col - 1);
        }
        if v.col + 1 < self.columns() {
            consider(v.col + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> Half {
        Half::from_twice(twice)
    }

    #[test]
    fn two_letter_geometry() {
        let g = build_geometry(&"h+,h-".parse().unwrap());
        assert_eq!(g.abscissas, vec![h(0), h(1), h(3), h(4), h(6)]);
        assert_eq!(g.zero, vec![h(0), h(1), h(1), h(0), h(0)]);
    }

    #[test]
    fn six_step_word() {
        let g = build_geometry(&"h+,h+,v+,v-,v-,h-".parse().unwrap());
        assert_eq!(
            g.abscissas,
            vec![h(0), h(1), h(3), h(4), h(6), h(8), h(9), h(11), h(12), h(14), h(15), h(16), h(18)]
        );
        assert_eq!(g.zero, vec![h(0), h(1), h(1), h(2), h(2), h(2), h(1), h(1), h(2), h(2), h(3), h(2), h(2)]);
    }

    #[test]
    fn primed_columns_shift_by_half() {
        let g = build_geometry(&"v+,v-".parse().unwrap());
        assert_eq!(g.abscissas[1], h(1) + Half::HALF);
        // a primed W_j shares the lattice of V_{j-1}
        assert_eq!(g.offset(1), g.offset(0));
        let g = build_geometry(&"h+".parse().unwrap());
        assert_eq!(g.offset(1), g.offset(2));
    }

    #[test]
    fn degrees() {
        let g = build_geometry(&"h+,v+".parse().unwrap());
        // W vertices have one horizontal and two diagonal neighbours
        assert_eq!(g.neighbours(Vertex::new(1, h(0))).len(), 3);
        assert_eq!(g.neighbours(Vertex::new(3, h(2))).len(), 3);
        // V_1 sits between an unprimed and a primed W: degree 2
        assert_eq!(g.neighbours(Vertex::new(2, h(0))).len(), 2);
    }
}

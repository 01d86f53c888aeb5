//! Exhaustive checks of the flip graph of admissible matchings.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::steep::FlipDir;

use super::geometry::Edge;
use super::matching::{minimal_matching, MatchingWindow};
use super::seq::pure_extended_sequences;
use super::word::DiamondWord;

/// Outcome of a breadth-first search from the minimal matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraphReport {
    pub diamond: DiamondWord,
    pub max_size: usize,
    pub states: usize,
    pub counterexample: Option<String>,
}

impl FlipGraphReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Window tall enough for every pure sequence of total size at most `max_size`.
pub fn search_half_height(diamond: &DiamondWord, max_size: usize) -> i64 {
    (diamond.len() / 2 + max_size) as i64 + 3
}

/// Explores matchings with `Σ|λ| ≤ max_size` from the minimal one, and checks that
/// - the distance of every matching equals `Σ|λ^(j)|`, with `|λ^(j)|` flips at abscissa `3j/2` on
///   every shortest path;
/// - each flip moves one part of `λ^(j)` by one, `j` its face index, up for ascendent flips;
/// - every non-minimal matching has a descendent flip;
/// - the states reached are exactly the pure sequences within the bound.
pub fn check_flip_graph(diamond: &DiamondWord, max_size: usize) -> FlipGraphReport {
    let a = search_half_height(diamond, max_size);
    let start = minimal_matching(diamond, a).expect("window sized for the bound");
    let k = diamond.len();
    let mut seen: HashMap<BTreeSet<Edge>, (usize, Vec<usize>)> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.edges().clone(), (0, vec![0; k + 1]));
    queue.push_back(start);
    let report = |states: usize, why: Option<String>| FlipGraphReport {
        diamond: diamond.clone(),
        max_size,
        states,
        counterexample: why,
    };
    let mut sequences = BTreeSet::new();
    while let Some(m) = queue.pop_front() {
        let (d, counts) = seen[m.edges()].clone();
        let s = match m.psi() {
            Ok(s) => s,
            Err(e) => return report(seen.len(), Some(format!("unreadable matching: {e}"))),
        };
        if s.size() != d || s.per_abscissa() != counts {
            return report(
                seen.len(),
                Some(format!("{:?}: distance {d} with counts {counts:?}, sizes {:?}", s.lambdas(), s.per_abscissa())),
            );
        }
        sequences.insert(s.clone());
        let mut has_descent = d == 0;
        for (flip, next) in m.flips() {
            let t = match next.psi() {
                Ok(t) => t,
                Err(e) => return report(seen.len(), Some(format!("flip {flip:?} leaves the admissible set: {e}"))),
            };
            let j = flip.face.j;
            let expected = s.size() as i64 + flip.dir.delta();
            let changed: Vec<usize> = (0..=k).filter(|&i| s.lambda(i) != t.lambda(i)).collect();
            let one_part = changed == [j]
                && (0..=s.lambda(j).len().max(t.lambda(j).len()))
                    .filter(|&r| s.lambda(j).part(r) != t.lambda(j).part(r))
                    .count()
                    == 1;
            if !one_part || t.size() as i64 != expected {
                return report(seen.len(), Some(format!("flip {flip:?} maps {:?} to {:?}", s.lambdas(), t.lambdas())));
            }
            has_descent |= flip.dir == FlipDir::Down;
            if t.size() > max_size {
                continue;
            }
            let mut c = counts.clone();
            if flip.dir == FlipDir::Up {
                c[j] += 1;
            }
            match seen.get(next.edges()) {
                None => {
                    seen.insert(next.edges().clone(), (d + 1, c));
                    queue.push_back(next);
                }
                Some((d2, c2)) if *d2 == d + 1 && *c2 != c => {
                    return report(seen.len(), Some(format!("two shortest paths to {:?} disagree", t.lambdas())));
                }
                _ => {}
            }
        }
        if !has_descent {
            return report(seen.len(), Some(format!("{:?} has no descendent flip", s.lambdas())));
        }
    }
    let expected: BTreeSet<_> = pure_extended_sequences(diamond, max_size).into_iter().collect();
    if expected != sequences {
        return report(seen.len(), Some(format!("reached {} sequences, expected {}", sequences.len(), expected.len())));
    }
    report(seen.len(), None)
}

/// Every flippable face of `m`, with its effect read through `psi`.
pub fn flip_effects(m: &MatchingWindow) -> Vec<(usize, FlipDir, super::seq::ExtendedSeq)> {
    m.flips().into_iter().filter_map(|(f, next)| next.psi().ok().map(|s| (f.face.j, f.dir, s))).collect()
}

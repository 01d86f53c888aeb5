//! Maya diagrams: a partition read as a particle configuration on a shifted half-integer line.

use crate::error::{Error, Result};
use crate::half::Half;
use crate::partition::Partition;

/// Occupied positions `x_n = λ_n − n + ½ + charge`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    pub charge: Half,
    pub partition: Partition,
}

impl MayaDiagram {
    pub fn new(partition: Partition, charge: Half) -> MayaDiagram {
        MayaDiagram { charge, partition }
    }

    /// The `n`-th occupied position, `n ≥ 1`.
    pub fn position(&self, n: usize) -> Half {
        let lambda = i64::from(self.partition.part(n - 1));
        self.charge + Half::HALF + (lambda - n as i64)
    }

    /// The first `count` occupied positions, strictly decreasing.
    pub fn positions(&self, count: usize) -> Vec<Half> {
        (1..=count).map(|n| self.position(n)).collect()
    }

    /// The `n`-th empty position counted from the lowest, `n ≥ 1`.
    pub fn hole(&self, n: usize) -> Half {
        let conj = i64::from(self.partition.conjugate().part(n - 1));
        self.charge - Half::HALF + (n as i64 - conj)
    }

    /// Sites of this diagram lie in `charge + ½ + ℤ`.
    pub fn on_lattice(&self, x: Half) -> bool {
        x.same_lattice(self.charge + Half::HALF)
    }

    pub fn is_occupied(&self, x: Half) -> bool {
        debug_assert!(self.on_lattice(x));
        let a = (x - self.charge - Half::HALF).to_int().expect("site on lattice");
        let len = self.partition.len() as i64;
        if a <= -(len + 1) {
            return true;
        }
        (1..=len).any(|n| i64::from(self.partition.part(n as usize - 1)) - n == a)
    }

    /// Sites strictly above this bound are empty.
    pub fn top(&self) -> Half {
        self.position(1)
    }

    /// Sites strictly below this bound are occupied.
    pub fn bottom(&self) -> Half {
        self.hole(1)
    }

    /// Rebuilds a diagram from a site predicate on the lattice `offset + ℤ`, given that every
    /// site below `lo` is occupied and every site above `hi` is empty.
    pub fn from_sites(offset: Half, lo: Half, hi: Half, occupied: impl Fn(Half) -> bool) -> Result<MayaDiagram> {
        let mut x = offset + ((hi - offset).floor() + 1);
        let mut occupied_seen = Vec::new();
        while x >= lo - 1 {
            if occupied(x) {
                occupied_seen.push(x);
            }
            x = x - 1;
        }
        let floor_site = x;
        if !occupied(floor_site) {
            return Err(Error::Parse(format!("site {floor_site} below the lower bound is empty")));
        }
        occupied_seen.push(floor_site);
        let n_last = occupied_seen.len() as i64;
        let charge = floor_site + n_last - Half::HALF;
        let parts: Vec<i64> = occupied_seen
            .iter()
            .enumerate()
            .map(|(i, &x)| (x + (i as i64 + 1) - Half::HALF - charge).to_int().expect("lattice"))
            .collect();
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("sites do not form a Maya diagram".into()));
        }
        let parts = parts.into_iter().filter(|&p| p > 0).map(|p| p as u32).collect();
        Ok(MayaDiagram::new(Partition::new(parts)?, charge))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i64) -> Half {
        Half::from_twice(twice)
    }

    #[test]
    fn vacuum_positions() {
        let m = MayaDiagram::new(Partition::empty(), Half::ZERO);
        assert_eq!(m.positions(3), vec![h(-1), h(-3), h(-5)]);
        assert_eq!(m.hole(1), h(1));
    }

    #[test]
    fn russian_example() {
        let m = MayaDiagram::new(Partition::new(vec![4, 2, 1]).unwrap(), Half::ZERO);
        assert_eq!(m.positions(3), vec![h(7), h(1), h(-3)]);
    }

    #[test]
    fn holes_complement_particles() {
        let m = MayaDiagram::new(Partition::new(vec![3, 1, 1]).unwrap(), Half::int(2));
        let holes: Vec<Half> = (1..=6).map(|n| m.hole(n)).collect();
        for x in (-20..20).map(|a| Half::int(a) + Half::HALF) {
            assert_eq!(m.is_occupied(x), !holes.contains(&x) && x < m.hole(6));
        }
    }

    #[test]
    fn from_sites_inverts() {
        let m = MayaDiagram::new(Partition::new(vec![3, 1, 1]).unwrap(), Half::from_twice(-3));
        let back = MayaDiagram::from_sites(h(0), m.bottom() - 2, m.top() + 2, |x| m.is_occupied(x)).unwrap();
        assert_eq!(back, m);
    }
}

//! Sequences of partitions linked by a fixed list of strip relations, and their brute-force
//! enumeration.

use crate::error::{Error, Result};
use crate::partition::{interlaced, partitions_up_to, strip_extensions, Partition, StripRelation};

/// Checks `interlaced(λ^(i-1), λ^(i), rels[i-1])` for every step `i`.
pub fn check_chain(rels: &[StripRelation], lambdas: &[Partition]) -> Result<()> {
    if lambdas.len() != rels.len() + 1 {
        return Err(Error::Length { expected: rels.len() + 1, got: lambdas.len() });
    }
    for (i, rel) in rels.iter().enumerate() {
        if !interlaced(&lambdas[i], &lambdas[i + 1], *rel) {
            return Err(Error::Interlacing { relation: *rel, step: i + 1 });
        }
    }
    Ok(())
}

/// How successors are produced during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Candidates {
    /// Direct strip generation.
    Strips,
    /// Filter every partition within budget by the interlacing predicate.
    Filter,
}

/// Boundary condition at one end of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum End {
    Fixed(Partition),
    Free,
}

/// Calls `f` on every chain `λ^(0..=k)` with the given ends and `Σ_i |λ^(i)| ≤ budget`.
/// The order is deterministic: depth first, successors in canonical order.
pub fn for_each_chain(
    rels: &[StripRelation],
    first: &End,
    last: &End,
    budget: usize,
    candidates: Candidates,
    mut f: impl FnMut(&[Partition]),
) {
    let pool = match candidates {
        Candidates::Filter => partitions_up_to(budget),
        Candidates::Strips => Vec::new(),
    };
    let starts: Vec<Partition> = match first {
        End::Fixed(p) => vec![p.clone()],
        End::Free => partitions_up_to(budget),
    };
    let mut cur = Vec::with_capacity(rels.len() + 1);
    for start in starts {
        let used = start.size();
        if used > budget {
            continue;
        }
        cur.push(start);
        walk(rels, last, budget, used, candidates, &pool, &mut cur, &mut f);
        cur.pop();
    }
}

/// `h` horizontal and `v` vertical strip removals empty `p` iff `p` fits in the fat hook
/// `p_{h+1} ≤ v`.
fn can_vanish(rels: &[StripRelation], p: &Partition) -> bool {
    let h = rels.iter().filter(|r| **r == StripRelation::HMinus).count();
    let v = rels.iter().filter(|r| **r == StripRelation::VMinus).count();
    p.part(h) as usize <= v
}

#[allow(clippy::too_many_arguments)]
fn walk(
    rels: &[StripRelation],
    last: &End,
    budget: usize,
    used: usize,
    candidates: Candidates,
    pool: &[Partition],
    cur: &mut Vec<Partition>,
    f: &mut impl FnMut(&[Partition]),
) {
    let i = cur.len() - 1;
    let prev = &cur[i];
    if i == rels.len() {
        if let End::Fixed(p) = last {
            if p != prev {
                return;
            }
        }
        f(cur);
        return;
    }
    if let End::Fixed(p) = last {
        if p.is_empty() && !can_vanish(&rels[i..], prev) {
            return;
        }
    }
    let rel = rels[i];
    let room = budget - used;
    let next: Vec<Partition> = match candidates {
        Candidates::Strips => strip_extensions(prev, rel.reversed(), room),
        Candidates::Filter => pool.iter().filter(|p| p.size() <= room && interlaced(prev, p, rel)).cloned().collect(),
    };
    for p in next {
        let size = p.size();
        cur.push(p);
        walk(rels, last, budget, used + size, candidates, pool, cur, f);
        cur.pop();
    }
}

/// All chains, collected.
pub fn chains(
    rels: &[StripRelation],
    first: &End,
    last: &End,
    budget: usize,
    candidates: Candidates,
) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_chain(rels, first, last, budget, candidates, |c| out.push(c.to_vec()));
    out
}

/// Number of pure chains (both ends empty) with total size exactly `n`, for `n ≤ budget`.
pub fn pure_counts(rels: &[StripRelation], budget: usize, candidates: Candidates) -> Vec<u64> {
    let mut counts = vec![0u64; budget + 1];
    let e = End::Fixed(Partition::empty());
    for_each_chain(rels, &e, &e, budget, candidates, |c| {
        counts[c.iter().map(Partition::size).sum::<usize>()] += 1;
    });
    counts
}

use std::collections::BTreeMap;

use crate::partition::{partitions_up_to, strip_extensions, Partition, StripRelation};
use crate::series::SeriesRing;

/// A formal sum `Σ_λ a_λ |λ⟩` over partitions of size at most `cap`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<S> {
    cap: usize,
    zero: S,
    amps: BTreeMap<Partition, S>,
}

impl<S: SeriesRing> StateVector<S> {
    /// The zero state; `unit` fixes the ring (truncation, variables).
    pub fn zero(unit: &S, cap: usize) -> Self {
        StateVector { cap, zero: unit.zero_like(), amps: BTreeMap::new() }
    }

    /// `|λ⟩`.
    pub fn basis(lambda: &Partition, unit: &S, cap: usize) -> Self {
        let mut s = Self::zero(unit, cap);
        if lambda.size() <= cap {
            s.amps.insert(lambda.clone(), unit.one_like());
        }
        s
    }

    /// `|∅⟩`.
    pub fn vacuum(unit: &S, cap: usize) -> Self {
        Self::basis(&Partition::empty(), unit, cap)
    }

    /// `Σ_λ v^{|λ|} |λ⟩`.
    pub fn free(v: &S, cap: usize) -> Self {
        Self::free_over(v, cap, |_| true)
    }

    /// `Σ_{λ even} v^{|λ|} |λ⟩`, all parts even.
    pub fn even_free(v: &S, cap: usize) -> Self {
        Self::free_over(v, cap, |l| l.parts().iter().all(|p| p % 2 == 0))
    }

    fn free_over(v: &S, cap: usize, keep: impl Fn(&Partition) -> bool) -> Self {
        let pw = v.powers(cap);
        let mut s = Self::zero(v, cap);
        for l in partitions_up_to(cap) {
            if keep(&l) && !pw[l.size()].is_zero() {
                let a = pw[l.size()].clone();
                s.amps.insert(l, a);
            }
        }
        s
    }

    /// Builds `Σ a_λ |λ⟩` from explicit pairs; repeated partitions add up.
    pub fn from_pairs(unit: &S, cap: usize, pairs: impl IntoIterator<Item = (Partition, S)>) -> Self {
        let mut s = Self::zero(unit, cap);
        for (l, a) in pairs {
            if l.size() <= cap {
                s.accumulate(l, a);
            }
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, a) in &other.amps {
            out.accumulate(l.clone(), a.clone());
        }
        out
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn amplitudes(&self) -> &BTreeMap<Partition, S> {
        &self.amps
    }

    /// `⟨λ|self⟩`.
    pub fn amplitude(&self, lambda: &Partition) -> S {
        self.amps.get(lambda).cloned().unwrap_or_else(|| self.zero.clone())
    }

    fn accumulate(&mut self, lambda: Partition, a: S) {
        if a.is_zero() {
            return;
        }
        match self.amps.get_mut(&lambda) {
            Some(x) => {
                x.add_assign_ref(&a);
                if x.is_zero() {
                    self.amps.remove(&lambda);
                }
            }
            None => {
                self.amps.insert(lambda, a);
            }
        }
    }

    /// `Γ(t)` for the relation `rel` between output and input: the result carries every `μ`
    /// with `μ rel λ`, weighted `t^{||λ| − |μ||}`.
    pub fn apply(&self, rel: StripRelation, t: &S) -> Self {
        let pw = if t.is_one() { Vec::new() } else { t.powers(self.cap) };
        let mut out = Self::zero(&self.zero, self.cap);
        for (lambda, a) in &self.amps {
            for mu in strip_extensions(lambda, rel, self.cap) {
                let d = lambda.size().abs_diff(mu.size());
                let c = if pw.is_empty() {
                    a.clone()
                } else if pw[d].is_zero() {
                    continue;
                } else {
                    a.mul_ref(&pw[d])
                };
                out.accumulate(mu, c);
            }
        }
        out
    }

    /// The energy operator `|λ⟩ ↦ x^{|λ|} |λ⟩`.
    pub fn energy(&self, x: &S) -> Self {
        if x.is_one() {
            return self.clone();
        }
        let pw = x.powers(self.cap);
        let mut out = Self::zero(&self.zero, self.cap);
        for (lambda, a) in &self.amps {
            out.accumulate(lambda.clone(), a.mul_ref(&pw[lambda.size()]));
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.zero, self.cap);
        for (lambda, a) in &self.amps {
            out.accumulate(lambda.clone(), a.mul_ref(c));
        }
        out
    }

    /// `Σ_λ a_λ b_λ`.
    pub fn pair(&self, other: &Self) -> S {
        let mut acc = self.zero.clone();
        for (lambda, a) in &self.amps {
            if let Some(b) = other.amps.get(lambda) {
                acc.add_assign_ref(&a.mul_ref(b));
            }
        }
        acc
    }

    /// Drops every amplitude on partitions larger than `n`.
    pub fn restrict(&self, n: usize) -> Self {
        let amps = self.amps.iter().filter(|(l, _)| l.size() <= n).map(|(l, a)| (l.clone(), a.clone())).collect();
        StateVector { cap: self.cap.min(n), zero: self.zero.clone(), amps }
    }

    /// First partition where the two states differ.
    pub fn first_difference(&self, other: &Self) -> Option<Partition> {
        let keys: std::collections::BTreeSet<&Partition> = self.amps.keys().chain(other.amps.keys()).collect();
        keys.into_iter().find(|l| self.amplitude(l) != other.amplitude(l)).cloned()
    }
}

/// Weights of a chain `⟨·| E_0 Γ_1(t_1) E_1 ⋯ Γ_k(t_k) E_k |·⟩`: `energies[i]` grades
/// `|λ^(i)|`, `op_weights[i−1]` is the argument of the `i`-th operator.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainWeights<S> {
    pub energies: Vec<S>,
    pub op_weights: Vec<S>,
}

impl<S: SeriesRing> ChainWeights<S> {
    /// Energy `x` on every partition and trivial operator arguments.
    pub fn uniform(k: usize, x: &S) -> Self {
        ChainWeights { energies: vec![x.clone(); k + 1], op_weights: vec![x.one_like(); k] }
    }

    /// Operator arguments `ts` and no energies.
    pub fn literal(ts: Vec<S>) -> Self {
        let one = ts[0].one_like();
        ChainWeights { energies: vec![one; ts.len() + 1], op_weights: ts }
    }
}

/// Applies `E_k`, `Γ_k`, …, `E_1`, `Γ_1`, `E_0` to `ket` in that order.
pub fn run_chain<S: SeriesRing>(rels: &[StripRelation], w: &ChainWeights<S>, ket: &StateVector<S>) -> StateVector<S> {
    assert_eq!(w.energies.len(), rels.len() + 1, "one energy per partition");
    assert_eq!(w.op_weights.len(), rels.len(), "one argument per operator");
    let mut s = ket.clone();
    for i in (1..=rels.len()).rev() {
        s = s.energy(&w.energies[i]).apply(rels[i - 1], &w.op_weights[i - 1]);
    }
    s.energy(&w.energies[0])
}

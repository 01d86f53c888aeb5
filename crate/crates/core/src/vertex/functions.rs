//! Partition functions of steep tilings as vertex operator matrix elements.
//!
//! Every function takes the chain weights explicitly. With energies `x_0, …, x_{2ℓ}` and trivial
//! operator arguments, a sequence `(λ^(0), …, λ^(2ℓ))` is weighted by `Π_i x_i^{|λ^(i)|}`.
//! Every weight must have positive degree (or the operator arguments must), so that capping
//! partitions at the truncation order loses nothing.

use crate::partition::{partitions_up_to, Partition};
use crate::series::SeriesRing;
use crate::steep::SignWord;

use super::state::{run_chain, ChainWeights, StateVector};

/// `⟨∅| Γ_1 ⋯ Γ_{2ℓ} |∅⟩`.
pub fn pure_fn<S: SeriesRing>(w: &SignWord, weights: &ChainWeights<S>, cap: usize) -> S {
    let unit = &weights.energies[0];
    run_chain(&w.relations(), weights, &StateVector::vacuum(unit, cap)).amplitude(&Partition::empty())
}

/// `⟨α| Γ_1 ⋯ Γ_{2ℓ} |β⟩` with the absolute grading.
pub fn prescribed_fn<S: SeriesRing>(
    w: &SignWord,
    alpha: &Partition,
    beta: &Partition,
    weights: &ChainWeights<S>,
    cap: usize,
) -> S {
    let unit = &weights.energies[0];
    run_chain(&w.relations(), weights, &StateVector::basis(beta, unit, cap)).amplitude(alpha)
}

/// `⟨∅| Γ_1 ⋯ Γ_{2ℓ} |v⟩`: pure on the left, free on the right.
pub fn mixed_fn<S: SeriesRing>(w: &SignWord, weights: &ChainWeights<S>, v: &S, cap: usize) -> S {
    run_chain(&w.relations(), weights, &StateVector::free(v, cap)).amplitude(&Partition::empty())
}

/// `⟨u| Γ_1 ⋯ Γ_{2ℓ} |v⟩`: both rims free.
pub fn free_fn<S: SeriesRing>(w: &SignWord, weights: &ChainWeights<S>, u: &S, v: &S, cap: usize) -> S {
    run_chain(&w.relations(), weights, &StateVector::free(v, cap)).pair(&StateVector::free(u, cap))
}

/// `Σ_λ ⟨λ| Γ_1 ⋯ Γ_{2ℓ} |λ⟩`; `λ^(0) = λ^(2ℓ)` is weighted once, by `energies[2ℓ]`.
pub fn cylindric_fn<S: SeriesRing>(w: &SignWord, weights: &ChainWeights<S>, cap: usize) -> S {
    let rels = w.relations();
    let mut wt = weights.clone();
    wt.energies[0] = wt.energies[0].one_like();
    let mut acc = wt.energies[0].zero_like();
    for lambda in partitions_up_to(cap) {
        let ket = StateVector::basis(&lambda, &wt.energies[0], cap);
        acc.add_assign_ref(&run_chain(&rels, &wt, &ket).amplitude(&lambda));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integer, UniSeries};

    fn q(n: usize) -> UniSeries {
        UniSeries::monomial(1, Integer::from(1), n)
    }

    fn coeffs(s: &UniSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn pure(word: &str, n: usize) -> Vec<i64> {
        let w: SignWord = word.parse().unwrap();
        coeffs(&pure_fn(&w, &ChainWeights::uniform(w.len(), &q(n)), n))
    }

    #[test]
    fn small_pure_values() {
        assert_eq!(pure("+-", 4), vec![1, 1, 0, 0, 0]);
        assert_eq!(pure("++--", 4), vec![1, 1, 2, 3, 4]);
        assert_eq!(pure("-+", 4), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn mixed_constant_term_and_first_flip() {
        let w: SignWord = "+-".parse().unwrap();
        let one = UniSeries::one(6);
        let m = mixed_fn(&w, &ChainWeights::uniform(2, &q(6)), &one, 6);
        // (1+q)/(1-q^2)
        assert_eq!(coeffs(&m), vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn cylindric_all_plus_counts_partitions() {
        let w: SignWord = "++".parse().unwrap();
        let c = cylindric_fn(&w, &ChainWeights::uniform(2, &q(8)), 8);
        // only constant sequences, weighted q^{2|λ|}
        assert_eq!(coeffs(&c), vec![1, 0, 1, 0, 2, 0, 3, 0, 5]);
    }
}

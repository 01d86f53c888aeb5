use std::sync::Arc;

use crate::partition::StripRelation;
use crate::series::VarSpace;
use crate::{MultiSeries, UniSeries};

/// `ε = +1` when exactly one of the two operators is primed, else `−1`.
fn epsilon(a: StripRelation, b: StripRelation) -> bool {
    a.is_vertical() != b.is_vertical()
}

fn exchange_pairs(rels: &[StripRelation]) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    for i in 1..=rels.len() {
        for j in i + 1..=rels.len() {
            let (a, b) = (rels[i - 1], rels[j - 1]);
            if a.is_plus() && !b.is_plus() {
                out.push((i, j, epsilon(a, b)));
            }
        }
    }
    out
}

/// `Π_{i<j, ◊_i plus, ◊_j minus} (1 + ε q^{j−i})^ε`.
pub fn extended_q(rels: &[StripRelation], n: usize) -> UniSeries {
    let mut acc = UniSeries::one(n);
    for (i, j, odd) in exchange_pairs(rels) {
        let f = if odd {
            UniSeries::one_plus(j - i, n)
        } else {
            UniSeries::geom_inverse(j - i, n).expect("positive exponent")
        };
        acc = &acc * &f;
    }
    acc
}

/// Variables `x_1, …, x_{k−1}` for a word of `k` operators.
pub fn extended_space(rels: &[StripRelation]) -> Arc<VarSpace> {
    VarSpace::indexed("x", 1, rels.len() - 1)
}

/// `Π_{i<j, ◊_i plus, ◊_j minus} (1 + ε x_i ⋯ x_{j−1})^ε`.
pub fn extended_multi(rels: &[StripRelation], n: usize) -> MultiSeries {
    let sp = extended_space(rels);
    let mut acc = MultiSeries::one(&sp, n);
    for (i, j, odd) in exchange_pairs(rels) {
        let m: Vec<u32> = (1..rels.len()).map(|t| u32::from(t >= i && t < j)).collect();
        let f = if odd {
            MultiSeries::one_plus(&sp, &m, n)
        } else {
            MultiSeries::geom_inverse(&sp, &m, n).expect("positive degree")
        };
        acc = &acc * &f;
    }
    acc
}

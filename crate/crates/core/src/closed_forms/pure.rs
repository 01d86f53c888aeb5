use std::sync::Arc;

use crate::error::Result;
use crate::partition::Partition;
use crate::series::{SeriesRing, VarSpace};
use crate::steep::SignWord;
use crate::{Integer, MultiSeries, UniSeries};

/// Positions `(i, j)`, `i < j`, 1-based, with `w_i = +` and `w_j = −`.
fn plus_minus_pairs(w: &SignWord) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.sign(i).is_plus() && !w.sign(j).is_plus() {
                out.push((i, j));
            }
        }
    }
    out
}

/// `Π_{i<j, w_i=+, w_j=−} φ_{i,j}(q^{j−i})`.
pub fn pure_q(w: &SignWord, n: usize) -> UniSeries {
    let mut acc = UniSeries::one(n);
    for (i, j) in plus_minus_pairs(w) {
        let f = UniSeries::phi_factor(i as i64, j as i64, j - i, n).expect("positive exponent");
        acc = &acc * &f;
    }
    acc
}

/// Variables `x_1, …, x_{2ℓ−1}`, each of weight 1.
pub fn diagonal_space(w: &SignWord) -> Arc<VarSpace> {
    VarSpace::indexed("x", 1, w.len() - 1)
}

/// `x_i ⋯ x_{j−1}` in `diagonal_space`.
fn interval(len: usize, i: usize, j: usize) -> Vec<u32> {
    (1..=len).map(|k| u32::from(k >= i && k < j)).collect()
}

/// `Π_{i<j, w_i=+, w_j=−} φ_{i,j}(x_i ⋯ x_{j−1})`, where `x_i` counts flips on diagonal `i`.
pub fn pure_multi(w: &SignWord, n: usize) -> MultiSeries {
    let sp = diagonal_space(w);
    let mut acc = MultiSeries::one(&sp, n);
    for (i, j) in plus_minus_pairs(w) {
        let f =
            MultiSeries::phi_factor(&sp, i as i64, j as i64, &interval(sp.len(), i, j), n).expect("positive degree");
        acc = &acc * &f;
    }
    acc
}

/// Young diagram cut out by the path reading `w` (south for `+`, west for `−`): one row per `+`,
/// of length the number of later `−`.
pub fn hook_diagram(w: &SignWord) -> Partition {
    let n = w.len();
    let rows = (1..=n)
        .filter(|&i| w.sign(i).is_plus())
        .map(|i| (i + 1..=n).filter(|&j| !w.sign(j).is_plus()).count() as u32)
        .collect();
    Partition::from_padded(rows).expect("counts decrease along the word")
}

/// `Π_{c ∈ λ(w)} (1 + ε(c) q^{h(c)})^{ε(c)}` with `ε(c) = (−1)^{h(c)+1}`.
pub fn hook_q(w: &SignWord, n: usize) -> UniSeries {
    let lambda = hook_diagram(w);
    let mut acc = UniSeries::one(n);
    for (i, j) in lambda.cells() {
        let h = lambda.hook(i, j);
        let f =
            if h % 2 == 1 { UniSeries::one_plus(h, n) } else { UniSeries::geom_inverse(h, n).expect("positive hook") };
        acc = &acc * &f;
    }
    acc
}

/// Degree of `Π_{i=1}^{ℓ} (1 + q^{2i−1})^{ℓ+1−i}`.
pub fn aztec_degree(l: usize) -> usize {
    (1..=l).map(|i| (l + 1 - i) * (2 * i - 1)).sum()
}

/// `Π_{i=1}^{ℓ} (1 + q^{2i−1})^{ℓ+1−i}`, exact.
pub fn aztec_poly(l: usize) -> UniSeries {
    let n = aztec_degree(l);
    let mut acc = UniSeries::one(n);
    for i in 1..=l {
        let f = UniSeries::one_plus(2 * i - 1, n);
        acc = &acc * &f.pow(l + 1 - i);
    }
    acc
}

/// `Π_{i odd < j even} (1 + z_i z_j)` over `z_1, …, z_{2ℓ}`, exact.
pub fn stanley_multi(l: usize) -> MultiSeries {
    let sp = VarSpace::indexed("z", 1, 2 * l);
    let n = l * (l + 1);
    let mut acc = MultiSeries::one(&sp, n);
    for i in (1..=2 * l).step_by(2) {
        for j in (i + 1..=2 * l).step_by(2) {
            let mut m = vec![0; 2 * l];
            m[i - 1] = 1;
            m[j - 1] = 1;
            acc = &acc * &MultiSeries::one_plus(&sp, &m, n);
        }
    }
    acc
}

/// Exponent images of `x_{2k−1} ↦ z_{2k−1} z_{2k}` and `x_{2k} ↦ 1/(z_{2k} z_{2k+1})`.
pub fn stanley_images(l: usize) -> Vec<Vec<i64>> {
    (1..2 * l)
        .map(|i| {
            let mut e = vec![0i64; 2 * l];
            if i % 2 == 1 {
                e[i - 1] = 1;
                e[i] = 1;
            } else {
                e[i - 1] = -1;
                e[i] = -1;
            }
            e
        })
        .collect()
}

/// `Π_i (1 + q^{2i−1})^{2 min(i, ℓ+1−i) − 1} Π_i (1 − q^{2i})^{−2 min(i, ℓ−i)}`.
pub fn pyramid_q(l: usize, n: usize) -> UniSeries {
    let mut acc = UniSeries::one(n);
    for i in 1..=l {
        let e = 2 * i.min(l + 1 - i) - 1;
        acc = &acc * &UniSeries::one_plus(2 * i - 1, n).pow(e);
    }
    for i in 1..l {
        let e = 2 * i.min(l - i);
        let g = UniSeries::geom_inverse(2 * i, n).expect("positive exponent");
        acc = &acc * &g.pow(e);
    }
    acc
}

/// `Π_{k≥1} (1 + q^{2k−1})^{2k−1} / (1 − q^{2k})^{2k}`.
pub fn pyramid_limit(n: usize) -> UniSeries {
    let mut acc = UniSeries::one(n);
    for k in 1..=n.div_ceil(2) {
        acc = &acc * &UniSeries::one_plus(2 * k - 1, n).pow(2 * k - 1);
        if 2 * k <= n {
            let g = UniSeries::geom_inverse(2 * k, n).expect("positive exponent");
            acc = &acc * &g.pow(2 * k);
        }
    }
    acc
}

/// `true` when `pure_q(w)` is a polynomial: no `(+, −)` pair at even distance.
pub fn pure_is_polynomial(w: &SignWord) -> bool {
    plus_minus_pairs(w).iter().all(|(i, j)| (j - i) % 2 == 1)
}

/// Degree of `pure_q(w)` when it is a polynomial.
pub fn pure_degree(w: &SignWord) -> Option<usize> {
    pure_is_polynomial(w).then(|| plus_minus_pairs(w).iter().map(|(i, j)| j - i).sum())
}

/// Value at `q = 1` of an exact polynomial.
pub fn value_at_one(s: &UniSeries) -> Integer {
    s.sum_coeffs()
}

/// Drops leading `−` and trailing `+` letters, keeping at least one letter pair.
pub fn strip_inert(w: &SignWord) -> Result<SignWord> {
    let signs = w.signs();
    let start = signs.iter().position(|s| s.is_plus()).unwrap_or(signs.len());
    let end = signs.iter().rposition(|s| !s.is_plus()).map_or(0, |e| e + 1);
    let mut core: Vec<_> = if start < end { signs[start..end].to_vec() } else { Vec::new() };
    if core.is_empty() {
        return SignWord::new(vec![crate::steep::Sign::Minus; 2]);
    }
    if core.len() % 2 == 1 {
        core.insert(0, crate::steep::Sign::Minus);
    }
    SignWord::new(core)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        s.parse().unwrap()
    }

    fn c(s: &UniSeries) -> Vec<i64> {
        s.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn small_products() {
        assert_eq!(c(&pure_q(&w("+-"), 3)), vec![1, 1, 0, 0]);
        assert_eq!(c(&pure_q(&w("++--"), 4)), vec![1, 1, 2, 3, 4]);
        assert_eq!(c(&pure_q(&w("----"), 3)), vec![1, 0, 0, 0]);
    }

    #[test]
    fn staircase_for_aztec_words() {
        assert_eq!(hook_diagram(&w("+-+-+-")).parts(), &[3, 2, 1]);
        assert_eq!(hook_diagram(&w("-+")).parts(), &[] as &[u32]);
    }

    #[test]
    fn aztec_values() {
        assert_eq!(c(&aztec_poly(1)), vec![1, 1]);
        assert_eq!(value_at_one(&aztec_poly(2)), Integer::from(8));
        assert_eq!(value_at_one(&aztec_poly(4)), Integer::from(1024));
    }

    #[test]
    fn pyramid_small() {
        assert_eq!(c(&pyramid_q(1, 3)), vec![1, 1, 0, 0]);
        assert_eq!(c(&pyramid_q(2, 4)), vec![1, 1, 2, 3, 4]);
        assert_eq!(c(&pyramid_limit(4))[..3], [1, 1, 2]);
    }

    #[test]
    fn strip_inert_letters() {
        assert_eq!(strip_inert(&w("--+-++")).unwrap(), w("+-"));
        assert_eq!(strip_inert(&w("-+-+")).unwrap(), w("+-"));
        assert_eq!(strip_inert(&w("-+")).unwrap(), w("--"));
    }
}

use std::sync::Arc;

use crate::series::VarSpace;
use crate::steep::SignWord;
use crate::{MultiSeries, UniSeries};

use super::pure::pure_q;

/// `T_w(q) Π_{k≥1} [ 1/(1 − q^{2kℓ}) Π_{w_a=+, w_b=−} φ_{a,b}(q^{2kℓ+b−a}) ]`, the inner product
/// running over all positions `a`, `b` regardless of order.
pub fn cyl_q(w: &SignWord, n: usize) -> UniSeries {
    let len = w.len() as i64;
    let mut acc = pure_q(w, n);
    // the smallest exponent at level k is kL − (L − 1)
    for k in 1..=n.div_ceil(w.len()) as i64 {
        let period = k * len;
        if period as usize <= n {
            acc = &acc * &UniSeries::geom_inverse(period as usize, n).expect("positive period");
        }
        for a in 1..=w.len() {
            for b in 1..=w.len() {
                if !(w.sign(a).is_plus() && !w.sign(b).is_plus()) {
                    continue;
                }
                let e = period + b as i64 - a as i64;
                if e as usize <= n {
                    let f = UniSeries::phi_factor(a as i64, b as i64, e as usize, n).expect("positive exponent");
                    acc = &acc * &f;
                }
            }
        }
    }
    acc
}

/// Variables `x_1, …, x_{2ℓ}` of weight 1, `x_i` grading `|λ^(i)|`.
pub fn cyl_space(w: &SignWord) -> Arc<VarSpace> {
    VarSpace::indexed("x", 1, w.len())
}

/// `Π_{k≥1} [ 1/(1 − y^k) Π_{i<j, +−} φ_{i,j}(y^{k−1} x_i⋯x_{j−1})
/// Π_{i<j, −+} φ_{i,j}(y^{k−1} x_1⋯x_{i−1} x_j⋯x_{2ℓ}) ]`, `y = x_1 ⋯ x_{2ℓ}`.
pub fn cyl_multi(w: &SignWord, n: usize) -> MultiSeries {
    let sp = cyl_space(w);
    let len = w.len();
    let mut acc = MultiSeries::one(&sp, n);
    for k in 1..=n / len + 1 {
        let base = (k - 1) as u32;
        if k * len <= n {
            acc = &acc * &MultiSeries::geom_inverse(&sp, &vec![k as u32; len], n).expect("positive degree");
        }
        for i in 1..=len {
            for j in i + 1..=len {
                let inside = |t: usize| t >= i && t < j;
                let mono: Vec<u32> = match (w.sign(i).is_plus(), w.sign(j).is_plus()) {
                    (true, false) => (1..=len).map(|t| base + u32::from(inside(t))).collect(),
                    (false, true) => (1..=len).map(|t| base + u32::from(!inside(t))).collect(),
                    _ => continue,
                };
                if sp.degree(&mono) <= n {
                    let f = MultiSeries::phi_factor(&sp, i as i64, j as i64, &mono, n).expect("positive degree");
                    acc = &acc * &f;
                }
            }
        }
    }
    acc
}

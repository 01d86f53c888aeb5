use std::sync::Arc;

use crate::error::Result;
use crate::partition::Partition;
use crate::series::{phi_is_odd, SeriesRing, VarSpace};
use crate::steep::SignWord;
use crate::{Integer, MultiSeries, UniSeries};

use super::pure::pure_q;

/// `m_i = 2ℓ + 1 − i` if `w_i = +`, else `i`.
pub fn boundary_exponents(w: &SignWord) -> Vec<usize> {
    let l = w.len() + 1;
    (1..=w.len()).map(|i| if w.sign(i).is_plus() { l - i } else { i }).collect()
}

fn phi_q(i: usize, j: usize, e: usize, n: usize) -> UniSeries {
    UniSeries::phi_factor(i as i64, j as i64, e, n).expect("positive exponent")
}

fn geom_q(e: usize, n: usize) -> UniSeries {
    UniSeries::geom_inverse(e, n).expect("positive exponent")
}

/// `T_w(q) Π_{w_i=+} 1/(1 − q^{m_i}) Π_{i<j, w_i=w_j=+} φ_{i,j}(q^{m_i+m_j})`.
pub fn mixed_q(w: &SignWord, n: usize) -> UniSeries {
    let m = boundary_exponents(w);
    let mut acc = pure_q(w, n);
    for i in 1..=w.len() {
        if !w.sign(i).is_plus() {
            continue;
        }
        acc = &acc * &geom_q(m[i - 1], n);
        for j in i + 1..=w.len() {
            if w.sign(j).is_plus() {
                acc = &acc * &phi_q(i, j, m[i - 1] + m[j - 1], n);
            }
        }
    }
    acc
}

/// `T_w(q) Π_{k≥0} [ 1/(1 − q^{(k+1)L}) Π_i 1/(1 − q^{kL+m_i})
/// Π_{i<j, w_i=w_j} φ_{i,j}(q^{2kL+m_i+m_j}) Π_{i<j, w_i≠w_j} φ_{i,j}(q^{(2k+1)L+m_i+m_j}) ]`,
/// `L = 2ℓ + 1`.
pub fn free_q(w: &SignWord, n: usize) -> UniSeries {
    let l = w.len() + 1;
    let m = boundary_exponents(w);
    let mut acc = pure_q(w, n);
    for k in 0..=n / l {
        acc = &acc * &geom_q((k + 1) * l, n);
        for i in 1..=w.len() {
            let e = k * l + m[i - 1];
            if e <= n {
                acc = &acc * &geom_q(e, n);
            }
            for j in i + 1..=w.len() {
                let same = w.sign(i) == w.sign(j);
                let e = if same { 2 * k * l } else { (2 * k + 1) * l } + m[i - 1] + m[j - 1];
                if e <= n {
                    acc = &acc * &phi_q(i, j, e, n);
                }
            }
        }
    }
    acc
}

/// Variables `q`, `v` with `v` a weight-0 marker.
pub fn mixed_space() -> Arc<VarSpace> {
    VarSpace::new(vec!["q".into(), "v".into()], vec![1, 0])
}

/// Variables `q`, `u`, `v` with `u`, `v` weight-0 markers.
pub fn free_space() -> Arc<VarSpace> {
    VarSpace::new(vec!["q".into(), "u".into(), "v".into()], vec![1, 0, 0])
}

/// `Π_{w_i=+} 1/(1 − v y_i) Π_{i<j, +−} φ_{i,j}(y_i/y_j) Π_{i<j, ++} φ_{i,j}(v² y_i y_j)` with
/// `y_i = q^{2ℓ+1−i}`; `v` records `|λ^(2ℓ)|`.
pub fn mixed_multi(w: &SignWord, n: usize) -> MultiSeries {
    let sp = mixed_space();
    let l = (w.len() + 1) as u32;
    let mut acc = MultiSeries::one(&sp, n);
    for i in 1..=w.len() {
        if !w.sign(i).is_plus() {
            continue;
        }
        let yi = l - i as u32;
        acc = &acc * &MultiSeries::geom_inverse(&sp, &[yi, 1], n).expect("positive degree");
        for j in i + 1..=w.len() {
            let yj = l - j as u32;
            let f = if w.sign(j).is_plus() {
                MultiSeries::phi_factor(&sp, i as i64, j as i64, &[yi + yj, 2], n)
            } else {
                MultiSeries::phi_factor(&sp, i as i64, j as i64, &[(j - i) as u32, 0], n)
            };
            acc = &acc * &f.expect("positive degree");
        }
    }
    acc
}

/// The free product refined by `u^{|λ^(0)|} v^{|λ^(2ℓ)|}`.
pub fn free_multi(w: &SignWord, n: usize) -> MultiSeries {
    let sp = free_space();
    let len = w.len();
    let l = len + 1;
    let mut acc = MultiSeries::one(&sp, n);
    let mul = |acc: &mut MultiSeries, f: Result<MultiSeries>| {
        *acc = &*acc * &f.expect("positive degree");
    };
    for k in 1..=n / l + 1 {
        let k32 = k as u32;
        if k * l <= n {
            mul(&mut acc, MultiSeries::geom_inverse(&sp, &[(k * l) as u32, k32, k32], n));
        }
        for i in 1..=len {
            let mono = if w.sign(i).is_plus() {
                [((k - 1) * l + l - i) as u32, k32 - 1, k32]
            } else {
                [((k - 1) * l + i) as u32, k32, k32 - 1]
            };
            if mono[0] as usize <= n {
                mul(&mut acc, MultiSeries::geom_inverse(&sp, &mono, n));
            }
            for j in i + 1..=len {
                let mono = match (w.sign(i).is_plus(), w.sign(j).is_plus()) {
                    (true, false) => [(2 * (k - 1) * l + j - i) as u32, 2 * k32 - 2, 2 * k32 - 2],
                    (true, true) => [(2 * k * l - i - j) as u32, 2 * k32 - 2, 2 * k32],
                    (false, true) => [(2 * k * l + i - j) as u32, 2 * k32, 2 * k32],
                    (false, false) => [(2 * (k - 1) * l + i + j) as u32, 2 * k32, 2 * k32 - 2],
                };
                if mono[0] as usize <= n {
                    mul(&mut acc, MultiSeries::phi_factor(&sp, i as i64, j as i64, &mono, n));
                }
            }
        }
    }
    acc
}

/// `Π_i 1/(1 − v y_i) Π_{i<j, j−i odd} (1 + v² y_i y_j) Π_{i<j, j−i even} 1/(1 − v² y_i y_j)`
/// for arbitrary series `y_1, …, y_{2ℓ}` and `v` in a common ring.
pub fn superlittlewood(ys: &[MultiSeries], v: &MultiSeries) -> Result<MultiSeries> {
    let one = v.one_like();
    let inv = |x: &MultiSeries| -> Result<MultiSeries> { (&one - x).inverse() };
    let v2 = v.mul_ref(v);
    let mut acc = one.clone();
    for (a, yi) in ys.iter().enumerate() {
        acc = acc.mul_ref(&inv(&v.mul_ref(yi))?);
        for (b, yj) in ys.iter().enumerate().skip(a + 1) {
            let x = v2.mul_ref(yi).mul_ref(yj);
            let f = if phi_is_odd(a as i64, b as i64) { &one + &x } else { inv(&x)? };
            acc = acc.mul_ref(&f);
        }
    }
    Ok(acc)
}

/// Variables `q`, `a`, `b` with `a`, `b` weight-0 markers.
pub fn super_space() -> Arc<VarSpace> {
    VarSpace::new(vec!["q".into(), "a".into(), "b".into()], vec![1, 0, 0])
}

/// `Π_{(i,j) ∈ λ} (a q^{2i} + b q^{2j−1}) / (1 − q^{2h(i,j)})`, cells 1-based by row `i` and
/// column `j`.
pub fn hook_content_super(lambda: &Partition, n: usize) -> MultiSeries {
    let sp = super_space();
    let mut acc = MultiSeries::one(&sp, n);
    for (i, j) in lambda.cells() {
        let a = MultiSeries::monomial(&sp, vec![2 * i as u32, 1, 0], Integer::from(1), n);
        let b = MultiSeries::monomial(&sp, vec![2 * j as u32 - 1, 0, 1], Integer::from(1), n);
        let h = lambda.hook(i, j) as u32;
        let g = MultiSeries::geom_inverse(&sp, &[2 * h, 0, 0], n).expect("positive hook");
        acc = &(&acc * &(&a + &b)) * &g;
    }
    acc
}

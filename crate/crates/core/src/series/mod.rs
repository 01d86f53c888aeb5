//! Exact truncated power series, univariate and multivariate.

mod multi;
mod uni;

use std::fmt;

use num_traits::{Num, Signed};

pub use multi::{Monomial, MultiPowerSeries, VarSpace};
pub use uni::PowerSeries;

/// Exact coefficient ring.
pub trait Coefficient: Num + Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Coefficient for T where T: Num + Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// The ring operations the vertex engine needs from an amplitude.
pub trait SeriesRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn pow(&self, mut n: usize) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// `self^0, …, self^n`.
    fn powers(&self, n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.one_like());
        for k in 1..=n {
            let next = out[k - 1].mul_ref(self);
            out.push(next);
        }
        out
    }
}

/// `φ_{i,j}` chooses `1 + m` when `j − i` is odd and `1/(1 − m)` when even.
pub fn phi_is_odd(i: i64, j: i64) -> bool {
    (j - i).rem_euclid(2) == 1
}

pub(crate) fn coeff_json<C: fmt::Display>(c: &C) -> serde_json::Value {
    let s = c.to_string();
    match s.parse::<serde_json::Number>() {
        Ok(n) => serde_json::Value::Number(n),
        Err(_) => serde_json::Value::String(s),
    }
}

/// Writes `c*m` with the usual elisions; `first` controls the leading sign.
pub(crate) fn write_term<C: Coefficient>(f: &mut fmt::Formatter<'_>, c: &C, mono: &str, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    match (mono.is_empty(), abs.is_one()) {
        (true, _) => write!(f, "{abs}"),
        (false, true) => f.write_str(mono),
        (false, false) => write!(f, "{abs}*{mono}"),
    }
}

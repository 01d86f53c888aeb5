use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{coeff_json, phi_is_odd, write_term, Coefficient, PowerSeries, SeriesRing};

pub type Monomial = Vec<u32>;

/// Ordered variable names with grading weights; weight-0 variables are markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSpace {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarSpace {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Arc<VarSpace> {
        assert_eq!(names.len(), weights.len(), "one weight per variable");
        Arc::new(VarSpace { names, weights })
    }

    /// `prefix1, …, prefixN`, all of weight 1.
    pub fn indexed(prefix: &str, from: usize, to: usize) -> Arc<VarSpace> {
        let names: Vec<String> = (from..=to).map(|i| format!("{prefix}{i}")).collect();
        let weights = vec![1; names.len()];
        VarSpace::new(names, weights)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &[u32]) -> usize {
        m.iter().zip(&self.weights).map(|(&e, &w)| (e * w) as usize).sum()
    }

    pub fn unit(&self, i: usize) -> Monomial {
        let mut m = vec![0; self.len()];
        m[i] = 1;
        m
    }
}

/// Sparse series truncated by weighted total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPowerSeries<C> {
    space: Arc<VarSpace>,
    trunc: usize,
    terms: BTreeMap<Monomial, C>,
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<C: Coefficient> MultiPowerSeries<C> {
    pub fn zero(space: &Arc<VarSpace>, trunc: usize) -> Self {
        MultiPowerSeries { space: space.clone(), trunc, terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<VarSpace>, trunc: usize) -> Self {
        Self::monomial(space, vec![0; space.len()], C::one(), trunc)
    }

    /// `c m`; zero when `m` exceeds the truncation.
    pub fn monomial(space: &Arc<VarSpace>, m: Monomial, c: C, trunc: usize) -> Self {
        assert_eq!(m.len(), space.len(), "exponent length");
        let mut s = Self::zero(space, trunc);
        if space.degree(&m) <= trunc && !c.is_zero() {
            s.terms.insert(m, c);
        }
        s
    }

    pub fn var(space: &Arc<VarSpace>, i: usize, trunc: usize) -> Self {
        Self::monomial(space, space.unit(i), C::one(), trunc)
    }

    pub fn space(&self) -> &Arc<VarSpace> {
        &self.space
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn coeff(&self, m: &[u32]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// `1/(1 − m)`.
    pub fn geom_inverse(space: &Arc<VarSpace>, m: &[u32], trunc: usize) -> Result<Self> {
        let d = space.degree(m);
        if d == 0 {
            return Err(Error::NotInvertible("1/(1 - m) needs a monomial of positive degree".into()));
        }
        let mut s = Self::zero(space, trunc);
        let mut cur = vec![0; space.len()];
        for _ in 0..=trunc / d {
            s.terms.insert(cur.clone(), C::one());
            cur = mono_mul(&cur, m);
        }
        Ok(s)
    }

    /// `1 + m`.
    pub fn one_plus(space: &Arc<VarSpace>, m: &[u32], trunc: usize) -> Self {
        let a = Self::one(space, trunc);
        let b = Self::monomial(space, m.to_vec(), C::one(), trunc);
        &a + &b
    }

    /// `φ_{i,j}(m)`.
    pub fn phi_factor(space: &Arc<VarSpace>, i: i64, j: i64, m: &[u32], trunc: usize) -> Result<Self> {
        if i == j {
            return Err(Error::Unsupported("phi factor needs i != j".into()));
        }
        if phi_is_odd(i, j) {
            Ok(Self::one_plus(space, m, trunc))
        } else {
            Self::geom_inverse(space, m, trunc)
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::Incompatible(format!("truncations {} and {}", self.trunc, other.trunc)));
        }
        if self.space != other.space {
            return Err(Error::Incompatible(format!("variables {:?} and {:?}", self.space.names, other.space.names)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_terms(other, false);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_terms(other, true);
        Ok(out)
    }

    fn add_terms(&mut self, other: &Self, negate: bool) {
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            let entry = self.terms.entry(m.clone()).or_insert_with(C::zero);
            *entry = entry.clone() + c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.trunc;
        let mut out = Self::zero(&self.space, n);
        let rhs: Vec<(&Monomial, &C, usize)> = other.terms.iter().map(|(m, c)| (m, c, self.space.degree(m))).collect();
        for (ma, ca) in &self.terms {
            let da = self.space.degree(ma);
            for &(mb, cb, db) in &rhs {
                if da + db > n {
                    continue;
                }
                let m = mono_mul(ma, mb);
                let entry = out.terms.entry(m).or_insert_with(C::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Multiplicative inverse by `1/(1 − u) = Σ u^k` with `u = 1 − self`; needs
    /// constant term 1 and no degree-0 monomials other than the constant.
    pub fn inverse(&self) -> Result<Self> {
        let zero = vec![0; self.space.len()];
        let ok = self.coeff(&zero).is_one() && self.terms.keys().all(|m| *m == zero || self.space.degree(m) > 0);
        if !ok {
            return Err(Error::NotInvertible("needs constant term 1 and positive-degree remainder".into()));
        }
        let one = Self::one(&self.space, self.trunc);
        let u = one.try_sub(self)?;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.trunc {
            power = power.try_mul(&u)?;
            if power.terms.is_empty() {
                break;
            }
            acc = acc.try_add(&power)?;
        }
        Ok(acc)
    }

    /// Replaces variable `i` by the series `images[i]` over another variable space.
    /// Exact when every image has minimal degree at least the weight of the variable it replaces.
    pub fn substitute(&self, images: &[MultiPowerSeries<C>]) -> Result<Self> {
        if images.len() != self.space.len() {
            return Err(Error::Incompatible("one image per variable".into()));
        }
        let target = images
            .first()
            .map(|s| (s.space.clone(), s.trunc))
            .ok_or_else(|| Error::Incompatible("no variables to substitute".into()))?;
        for (i, img) in images.iter().enumerate() {
            if img.space != target.0 || img.trunc != target.1 {
                return Err(Error::Incompatible("images live in different spaces".into()));
            }
            let min_deg = img.terms.keys().map(|m| target.0.degree(m)).min().unwrap_or(usize::MAX);
            if min_deg < self.space.weights[i] as usize {
                return Err(Error::Incompatible(format!("image of {} lowers the grading", self.space.names[i])));
            }
        }
        if target.1 > self.trunc {
            return Err(Error::Incompatible("substitution cannot raise the truncation".into()));
        }
        let mut out = Self::zero(&target.0, target.1);
        let mut cache: Vec<Vec<Self>> = images.iter().map(|img| vec![img.one_like()]).collect();
        for (m, c) in &self.terms {
            let mut term = Self::monomial(&target.0, vec![0; target.0.len()], c.clone(), target.1);
            for (i, &e) in m.iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().expect("nonempty").mul_ref(&images[i]);
                    cache[i].push(next);
                }
                term = term.mul_ref(&cache[i][e as usize]);
                if term.terms.is_empty() {
                    break;
                }
            }
            out.add_terms(&term, false);
        }
        Ok(out)
    }

    /// Maps variable `i` to `q^{exps[i]}`; exact when `exps[i]` is at least its weight.
    pub fn to_univariate(&self, exps: &[u32]) -> Result<PowerSeries<C>> {
        if exps.len() != self.space.len() {
            return Err(Error::Incompatible("one exponent per variable".into()));
        }
        if exps.iter().zip(&self.space.weights).any(|(e, w)| e < w) {
            return Err(Error::Incompatible("specialization lowers the grading".into()));
        }
        let mut coeffs = vec![C::zero(); self.trunc + 1];
        for (m, c) in &self.terms {
            let d: usize = m.iter().zip(exps).map(|(&a, &b)| (a * b) as usize).sum();
            if d <= self.trunc {
                coeffs[d] = coeffs[d].clone() + c.clone();
            }
        }
        Ok(PowerSeries::from_coeffs(coeffs, self.trunc))
    }

    /// Every weight-1 variable to `q`, every marker to 1.
    pub fn principal(&self) -> PowerSeries<C> {
        let exps = self.space.weights.clone();
        self.to_univariate(&exps).expect("weights are admissible exponents")
    }

    /// Image of each term under monomial maps with integer exponents (Laurent); only
    /// meaningful when the series is a polynomial below its truncation.
    pub fn laurent_image(&self, images: &[Vec<i64>]) -> BTreeMap<Vec<i64>, C> {
        let width = images.first().map_or(0, Vec::len);
        let mut out: BTreeMap<Vec<i64>, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0i64; width];
            for (i, &k) in m.iter().enumerate() {
                for (slot, d) in e.iter_mut().zip(&images[i]) {
                    *slot += i64::from(k) * d;
                }
            }
            let entry = out.entry(e.clone()).or_insert_with(C::zero);
            *entry = entry.clone() + c.clone();
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        out
    }

    /// Same series with a lower truncation.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.trunc {
            return Err(Error::Incompatible(format!("cannot raise truncation {} to {n}", self.trunc)));
        }
        let terms =
            self.terms.iter().filter(|(m, _)| self.space.degree(m) <= n).map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(MultiPowerSeries { space: self.space.clone(), trunc: n, terms })
    }

    /// Highest weighted degree with a nonzero term.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| self.space.degree(m)).max()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(m, c)| serde_json::json!({ "exp": m, "coeff": coeff_json(c) })).collect(),
        )
    }

    fn mono_string(&self, m: &[u32]) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.space.names.iter().zip(m) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl<C: Coefficient> fmt::Display for MultiPowerSeries<C> {
    /// Terms by increasing weighted degree, then by exponent vector descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        terms.sort_by(|a, b| self.space.degree(a.0).cmp(&self.space.degree(b.0)).then_with(|| b.0.cmp(a.0)));
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            write_term(f, c, &self.mono_string(m), k == 0)?;
        }
        Ok(())
    }
}

impl<C: Coefficient> SeriesRing for MultiPowerSeries<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.space, self.trunc)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.space, self.trunc)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.iter().all(|&e| e == 0) && c.is_one())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        self.check(other).expect("incompatible series");
        self.add_terms(other, false);
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("incompatible series")
    }

    fn neg_ref(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPowerSeries { space: self.space.clone(), trunc: self.trunc, terms }
    }
}

impl<C: Coefficient> std::ops::Add for &MultiPowerSeries<C> {
    type Output = MultiPowerSeries<C>;
    fn add(self, rhs: Self) -> MultiPowerSeries<C> {
        self.try_add(rhs).expect("incompatible series")
    }
}

impl<C: Coefficient> std::ops::Sub for &MultiPowerSeries<C> {
    type Output = MultiPowerSeries<C>;
    fn sub(self, rhs: Self) -> MultiPowerSeries<C> {
        self.try_sub(rhs).expect("incompatible series")
    }
}

impl<C: Coefficient> std::ops::Mul for &MultiPowerSeries<C> {
    type Output = MultiPowerSeries<C>;
    fn mul(self, rhs: Self) -> MultiPowerSeries<C> {
        self.try_mul(rhs).expect("incompatible series")
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type M = MultiPowerSeries<BigInt>;

    #[test]
    fn two_variable_geometric() {
        let sp = VarSpace::indexed("x", 1, 2);
        let g = M::geom_inverse(&sp, &[1, 1], 4).unwrap();
        let expect: Vec<Monomial> = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert_eq!(g.terms().keys().cloned().collect::<Vec<_>>(), expect);
        assert!(M::geom_inverse(&sp, &[0, 0], 4).is_err());
    }

    #[test]
    fn phi_even_gap() {
        let sp = VarSpace::indexed("x", 1, 3);
        let g = M::phi_factor(&sp, 2, 4, &[0, 1, 1], 4).unwrap();
        assert_eq!(g.to_string(), "1 + x2*x3 + x2^2*x3^2");
    }

    #[test]
    fn markers_do_not_truncate() {
        let sp = VarSpace::new(vec!["q".into(), "v".into()], vec![1, 0]);
        let g = M::geom_inverse(&sp, &[1, 1], 3).unwrap();
        assert_eq!(g.to_string(), "1 + q*v + q^2*v^2 + q^3*v^3");
        assert!(M::geom_inverse(&sp, &[0, 1], 3).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let sp = VarSpace::indexed("x", 1, 2);
        let a = &M::one_plus(&sp, &[1, 0], 5) - &M::monomial(&sp, vec![1, 2], BigInt::from(3), 5);
        assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn principal_specialization() {
        let sp = VarSpace::indexed("x", 1, 2);
        let g = M::geom_inverse(&sp, &[1, 1], 4).unwrap();
        assert_eq!(g.principal(), PowerSeries::geom_inverse(2, 4).unwrap());
    }

    #[test]
    fn json_terms_are_sorted() {
        let sp = VarSpace::indexed("x", 1, 2);
        let s = M::one_plus(&sp, &[0, 1], 3);
        assert_eq!(s.to_json().to_string(), r#"[{"exp":[0,0],"coeff":1},{"exp":[0,1],"coeff":1}]"#);
    }
}

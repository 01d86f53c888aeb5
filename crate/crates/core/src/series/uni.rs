use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{coeff_json, phi_is_odd, write_term, Coefficient, SeriesRing};

/// `Σ_{k ≤ N} c_k q^k`, exact modulo `q^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries<C> {
    trunc: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    pub fn zero(trunc: usize) -> Self {
        PowerSeries { trunc, coeffs: vec![C::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(0, C::one(), trunc)
    }

    /// `c q^e`; zero when `e > trunc`.
    pub fn monomial(e: usize, c: C, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if e <= trunc {
            s.coeffs[e] = c;
        }
        s
    }

    /// Pads with zeros or drops coefficients beyond `trunc`.
    pub fn from_coeffs(mut coeffs: Vec<C>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, C::zero());
        PowerSeries { trunc, coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Same series viewed modulo `q^{n+1}`, `n ≤ trunc`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.trunc {
            return Err(Error::Incompatible(format!("cannot raise truncation {} to {n}", self.trunc)));
        }
        Ok(PowerSeries { trunc: n, coeffs: self.coeffs[..=n].to_vec() })
    }

    /// `1/(1 − q^e)`.
    pub fn geom_inverse(e: usize, trunc: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::NotInvertible("1/(1 - 1) has no power series".into()));
        }
        let mut s = Self::zero(trunc);
        for k in (0..=trunc).step_by(e) {
            s.coeffs[k] = C::one();
        }
        Ok(s)
    }

    /// `1 + q^e`.
    pub fn one_plus(e: usize, trunc: usize) -> Self {
        let mut s = Self::one(trunc);
        if e <= trunc {
            s.coeffs[e] = s.coeffs[e].clone() + C::one();
        }
        s
    }

    /// `φ_{i,j}(q^e)`.
    pub fn phi_factor(i: i64, j: i64, e: usize, trunc: usize) -> Result<Self> {
        if i == j {
            return Err(Error::Unsupported("phi factor needs i != j".into()));
        }
        if phi_is_odd(i, j) {
            Ok(Self::one_plus(e, trunc))
        } else {
            Self::geom_inverse(e, trunc)
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::Incompatible(format!("truncations {} and {}", self.trunc, other.trunc)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(PowerSeries { trunc: self.trunc, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(PowerSeries { trunc: self.trunc, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.trunc;
        let mut out = Self::zero(n);
        let support: Vec<usize> = (0..=n).filter(|&k| !other.coeffs[k].is_zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &j in &support {
                if i + j > n {
                    break;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * other.coeffs[j].clone();
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = if c0.is_one() {
            C::one()
        } else if (-c0.clone()).is_one() {
            -C::one()
        } else {
            return Err(Error::NotInvertible(format!("constant term {c0} is not a unit")));
        };
        let n = self.trunc;
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = acc + self.coeffs[i].clone() * out.coeffs[k - i].clone();
                }
            }
            out.coeffs[k] = -(acc * inv0.clone());
        }
        Ok(out)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    /// Sum of the stored coefficients.
    pub fn sum_coeffs(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |a, c| a + c.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "trunc": self.trunc,
            "coeffs": self.coeffs.iter().map(coeff_json).collect::<Vec<_>>(),
        })
    }

    /// Renders with `var` as the variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a, C>(&'a PowerSeries<C>, &'a str);
        impl<C: Coefficient> fmt::Display for D<'_, C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (k, c) in self.0.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mono = match k {
                        0 => String::new(),
                        1 => self.1.to_string(),
                        _ => format!("{}^{k}", self.1),
                    };
                    write_term(f, c, &mono, first)?;
                    first = false;
                }
                if first {
                    f.write_str("0")?;
                }
                Ok(())
            }
        }
        D(self, var)
    }
}

impl<C: Coefficient> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

impl<C: Coefficient> SeriesRing for PowerSeries<C> {
    fn zero_like(&self) -> Self {
        Self::zero(self.trunc)
    }

    fn one_like(&self) -> Self {
        Self::one(self.trunc)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert_eq!(self.trunc, other.trunc, "truncation mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = a.clone() + b.clone();
            }
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).expect("truncation mismatch")
    }

    fn neg_ref(&self) -> Self {
        PowerSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<C: Coefficient> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, rhs: Self) -> PowerSeries<C> {
        self.try_add(rhs).expect("truncation mismatch")
    }
}

impl<C: Coefficient> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, rhs: Self) -> PowerSeries<C> {
        self.try_sub(rhs).expect("truncation mismatch")
    }
}

impl<C: Coefficient> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, rhs: Self) -> PowerSeries<C> {
        self.try_mul(rhs).expect("truncation mismatch")
    }
}

impl<C: Coefficient> Neg for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type S = PowerSeries<BigInt>;

    fn s(c: &[i64], n: usize) -> S {
        S::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect(), n)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&s(&[1, 1], 3) * &s(&[1, -1], 3), s(&[1, 0, -1], 3));
        let g = S::geom_inverse(1, 3).unwrap();
        assert_eq!(&s(&[1, 1], 3) * &g, s(&[1, 2, 2, 2], 3));
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(S::geom_inverse(1, 4).unwrap(), s(&[1, 1, 1, 1, 1], 4));
        let g2 = S::geom_inverse(2, 4).unwrap();
        assert_eq!(&g2 * &g2, s(&[1, 0, 2, 0, 3], 4));
        assert!(S::geom_inverse(0, 4).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(S::phi_factor(1, 2, 3, 6).unwrap(), s(&[1, 0, 0, 1], 6));
        assert_eq!(S::phi_factor(1, 3, 2, 6).unwrap(), s(&[1, 0, 1, 0, 1, 0, 1], 6));
    }

    #[test]
    fn inverse_of_unit() {
        let a = s(&[1, 3, -2, 5, 7], 4);
        assert!((&a * &a.inverse().unwrap()).is_one());
        let b = s(&[-1, 1], 4);
        assert!((&b * &b.inverse().unwrap()).is_one());
        assert!(s(&[2, 1], 4).inverse().is_err());
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(s(&[1], 2).try_mul(&s(&[1], 3)).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(s(&[1, 1], 4).to_string(), "1 + q");
        assert_eq!(s(&[1, -2, 0, 3], 4).to_string(), "1 - 2*q + 3*q^3");
        assert_eq!(S::zero(2).to_string(), "0");
        assert_eq!(s(&[1, 1], 2).to_json().to_string(), r#"{"trunc":2,"coeffs":[1,1,0]}"#);
    }

    #[test]
    fn generic_over_machine_integers() {
        let a = PowerSeries::<i64>::one_plus(1, 5);
        let b = PowerSeries::<i64>::geom_inverse(2, 5).unwrap();
        assert_eq!((&a * &b).coeffs(), &[1, 1, 1, 1, 1, 1]);
    }
}

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub const fn from_twice(twice: i64) -> Half {
        Half(twice)
    }

    pub const fn int(n: i64) -> Half {
        Half(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// `floor(self)`.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    /// Exact integer value; `None` for odd halves.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    /// True when `self` and `other` lie in the same coset of `ℤ`.
    pub fn same_lattice(self, other: Half) -> bool {
        (self.0 - other.0) % 2 == 0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Add<i64> for Half {
    type Output = Half;
    fn add(self, rhs: i64) -> Half {
        Half(self.0 + 2 * rhs)
    }
}

impl Sub<i64> for Half {
    type Output = Half;
    fn sub(self, rhs: i64) -> Half {
        Half(self.0 - 2 * rhs)
    }
}

impl From<i64> for Half {
    fn from(n: i64) -> Half {
        Half::int(n)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Half> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        match s.split_once('/') {
            Some((num, "2")) => num.trim().parse::<i64>().map(Half).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.parse::<i64>().map(Half::int).map_err(|_| bad()),
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Half, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        for t in -7..=7 {
            let h = Half::from_twice(t);
            assert_eq!(h.to_string().parse::<Half>().unwrap(), h);
        }
        assert_eq!(Half::from_twice(3).to_string(), "3/2");
        assert_eq!(Half::from_twice(-4).to_string(), "-2");
        assert!("1/3".parse::<Half>().is_err());
    }

    #[test]
    fn floor_rounds_down() {
        assert_eq!(Half::from_twice(-1).floor(), -1);
        assert_eq!(Half::from_twice(1).floor(), 0);
        assert_eq!(Half::from_twice(4).floor(), 2);
    }
}

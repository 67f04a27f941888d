//! Exact numbers on the half-integer lattice.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A number of the form `k/2`, stored as the integer `k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(pub i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn from_int(v: i64) -> Half {
        Half(2 * v)
    }

    /// The stored numerator, i.e. twice the value.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
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
        let bad = || Error::Invalid(format!("cannot parse {s:?} as a half-integer"));
        match s.split_once('/') {
            Some((num, "2")) => num.trim().parse::<i64>().map(Half).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.parse::<i64>().map(Half::from_int).map_err(|_| bad()),
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, o: Half) {
        self.0 += o.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, k: i64) -> Half {
        Half(self.0 * k)
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_int() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Half, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(Half::from_int(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

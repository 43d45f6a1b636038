//! Exact rationals extended with `+inf`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Exact rational number.
pub type Q = BigRational;

/// Builds `p/q` as an exact rational.
pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

/// Builds the integer `n` as an exact rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_q(s: &str) -> Result<Q, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let s = s.strip_prefix('+').unwrap_or(s);
            Ok(Q::from_integer(s.parse().map_err(|_| bad())?))
        }
    }
}

/// Smallest integer not below `x`.
pub fn ceil_q(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// An exact rational or positive infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Q),
    Infinite,
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(Q::zero())
    }

    pub fn int(n: i64) -> Self {
        ExtRational::Finite(qi(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            ExtRational::Finite(x) => Some(x),
            ExtRational::Infinite => None,
        }
    }

    /// `self - earlier`, where `inf - finite = inf` and `inf - inf` is reported
    /// as `None` (no meaningful change).
    pub fn delta_from(&self, earlier: &ExtRational) -> Option<ExtRational> {
        match (self, earlier) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => Some(ExtRational::Finite(a - b)),
            (ExtRational::Infinite, ExtRational::Finite(_)) => Some(ExtRational::Infinite),
            (ExtRational::Finite(_), ExtRational::Infinite) => None,
            (ExtRational::Infinite, ExtRational::Infinite) => None,
        }
    }
}

impl From<Q> for ExtRational {
    fn from(x: Q) -> Self {
        ExtRational::Finite(x)
    }
}

impl Add for ExtRational {
    type Output = ExtRational;
    fn add(self, rhs: ExtRational) -> ExtRational {
        match (self, rhs) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinite,
        }
    }
}

impl<'a> Add<&'a ExtRational> for ExtRational {
    type Output = ExtRational;
    fn add(self, rhs: &'a ExtRational) -> ExtRational {
        match (self, rhs) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinite,
        }
    }
}

impl Sub<&Q> for ExtRational {
    type Output = ExtRational;
    fn sub(self, rhs: &Q) -> ExtRational {
        match self {
            ExtRational::Finite(a) => ExtRational::Finite(a - rhs),
            ExtRational::Infinite => ExtRational::Infinite,
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
            (ExtRational::Finite(_), ExtRational::Infinite) => Ordering::Less,
            (ExtRational::Infinite, ExtRational::Finite(_)) => Ordering::Greater,
            (ExtRational::Infinite, ExtRational::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(x) => write!(f, "{x}"),
            ExtRational::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtRational::Infinite),
            other => parse_q(other).map(ExtRational::Finite),
        }
    }
}

/// Formats a rational with an explicit sign, used by the LP dump.
pub fn signed(x: &Q) -> String {
    if x.is_negative() {
        format!("{x}")
    } else {
        format!("+{x}")
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

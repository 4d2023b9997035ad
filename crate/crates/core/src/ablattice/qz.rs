//! Elements of Q/Z stored as reduced fractions in `[0, 1)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::Error;

/// An element of Q/Z, `num/den` with `gcd(num, den) = 1` and `0 <= num < den`.
///
/// Zero is `0/1`. Negative inputs are folded into `[0, 1)`, so `-1/4` is
/// stored as `3/4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZScalar {
    num: u64,
    den: u64,
}

impl QZScalar {
    pub const ZERO: QZScalar = QZScalar { num: 0, den: 1 };

    /// Builds `num/den` reduced modulo 1. Panics if `den == 0`.
    pub fn new(num: i128, den: u64) -> Self {
        assert!(den != 0, "QZScalar denominator must be positive");
        let d = den as i128;
        let n = num.rem_euclid(d);
        let g = (n as u128).gcd(&(den as u128));
        QZScalar {
            num: (n as u128 / g) as u64,
            den: (den as u128 / g) as u64,
        }
    }

    /// The element `1/den`.
    pub fn unit(den: u64) -> Self {
        Self::new(1, den)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Additive order in Q/Z.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// `k * self` reduced modulo 1.
    pub fn scale(&self, k: u64) -> Self {
        let n = (self.num as u128 * (k % self.den) as u128) % self.den as u128;
        Self::new(n as i128, self.den)
    }

    /// Scaling by a signed integer.
    pub fn scale_signed(&self, k: i64) -> Self {
        let s = self.scale(k.unsigned_abs());
        if k < 0 {
            -s
        } else {
            s
        }
    }

    /// The canonical p-th root: for `a/m` returns `a/(p*m)` reduced.
    pub fn canonical_root(&self, p: u64) -> Self {
        Self::new(self.num as i128, self.den * p)
    }

    /// Numerator over a common denominator `den`, which must be a multiple of
    /// `self.den()`.
    pub fn numerator_over(&self, den: u64) -> u64 {
        debug_assert_eq!(den % self.den, 0);
        self.num * (den / self.den)
    }
}

impl Default for QZScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl Add for QZScalar {
    type Output = QZScalar;

    fn add(self, rhs: QZScalar) -> QZScalar {
        let l = self.den.lcm(&rhs.den) as u128;
        let a = self.num as u128 * (l / self.den as u128);
        let b = rhs.num as u128 * (l / rhs.den as u128);
        let l64 = u64::try_from(l).expect("Q/Z denominator overflow");
        QZScalar::new(((a + b) % l) as i128, l64)
    }
}

impl Neg for QZScalar {
    type Output = QZScalar;

    fn neg(self) -> QZScalar {
        QZScalar::new(-(self.num as i128), self.den)
    }
}

impl Sub for QZScalar {
    type Output = QZScalar;

    fn sub(self, rhs: QZScalar) -> QZScalar {
        self + (-rhs)
    }
}

impl std::iter::Sum for QZScalar {
    fn sum<I: Iterator<Item = QZScalar>>(iter: I) -> QZScalar {
        iter.fold(QZScalar::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for QZScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for QZScalar {
    type Err = Error;

    /// Accepts `a/b` (with an optional sign on `a`) or a bare integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidFraction(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: i128 = n.parse().map_err(|_| bad())?;
        let den: u64 = d.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(QZScalar::new(num, den))
    }
}

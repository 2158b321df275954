//! Exact rational rank values.
//!
//! Ranks are integers everywhere except in the cyclic-flat axiom
//! checker, which accepts general (rational) polymatroids, so one
//! exact type covers both: a reduced `i64` ratio. No floating point
//! appears anywhere in the crate.

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact rank value.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(Ratio<i64>);

impl Rank {
    pub const ZERO: Rank = Rank(Ratio::new_raw(0, 1));

    pub fn new(numerator: i64, denominator: i64) -> Rank {
        Rank(Ratio::new(numerator, denominator))
    }

    pub fn int(value: i64) -> Rank {
        Rank(Ratio::from_integer(value))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The integer value, if the rank is integral.
    pub fn as_int(&self) -> Option<i64> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Parses `7` or `7/2`.
    pub fn parse(text: &str) -> std::result::Result<Rank, String> {
        let bad = |_| format!("bad rank value `{text}`");
        match text.split_once('/') {
            None => Ok(Rank::int(text.trim().parse().map_err(bad)?)),
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(bad)?;
                let q: i64 = q.trim().parse().map_err(bad)?;
                if q == 0 {
                    return Err(format!("zero denominator in `{text}`"));
                }
                Ok(Rank::new(p, q))
            }
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Rank {
    type Output = Rank;
    fn add(self, rhs: Rank) -> Rank {
        Rank(self.0 + rhs.0)
    }
}

impl Sub for Rank {
    type Output = Rank;
    fn sub(self, rhs: Rank) -> Rank {
        Rank(self.0 - rhs.0)
    }
}

impl Neg for Rank {
    type Output = Rank;
    fn neg(self) -> Rank {
        Rank(-self.0)
    }
}

impl Mul<i64> for Rank {
    type Output = Rank;
    fn mul(self, rhs: i64) -> Rank {
        Rank(self.0 * Ratio::from_integer(rhs))
    }
}

impl Sum for Rank {
    fn sum<I: Iterator<Item = Rank>>(iter: I) -> Rank {
        iter.fold(Rank::ZERO, Add::add)
    }
}

impl From<i64> for Rank {
    fn from(value: i64) -> Rank {
        Rank::int(value)
    }
}

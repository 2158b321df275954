//! Bitmask subsets of a ground set `[n] = {1, .., n}`.
//!
//! A subset is an `n`-bit mask; bit `i-1` stands for element `i`. The
//! canonical order on subsets is increasing mask value, and every
//! enumeration in the crate follows it.

use crate::{Error, Result};
use std::fmt;

/// Largest supported ground set. Tables hold `2^n` entries.
pub const MAX_GROUND: usize = 20;

/// The ground set `{1, .., n}`.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::CapacityExceeded {
                needed: n as u64,
                cap: MAX_GROUND as u64,
            });
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    /// All subsets in increasing mask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        subsets_of(self.n)
    }

    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.n
    }
}

/// All subsets of `[n]` in canonical (increasing mask) order.
pub fn subsets_of(n: usize) -> impl Iterator<Item = Subset> {
    (0u32..(1u32 << n)).map(Subset)
}

/// A subset of `[n]`, encoded as a bitmask.
///
/// The derived `Ord` is mask order, which is the crate's canonical
/// subset order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(element: usize) -> Subset {
        debug_assert!(element >= 1);
        Subset(1 << (element - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        let mut mask = 0u32;
        for e in elements {
            mask |= 1 << (e - 1);
        }
        Subset(mask)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && self.0 >> (element - 1) & 1 == 1
    }

    pub fn insert(self, element: usize) -> Subset {
        Subset(self.0 | 1 << (element - 1))
    }

    pub fn remove(self, element: usize) -> Subset {
        Subset(self.0 & !(1 << (element - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let e = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(e)
            }
        })
    }

    /// Parses `{1,3,4}` or `{}`.
    pub fn parse(text: &str) -> std::result::Result<Subset, String> {
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| format!("expected a subset like {{1,2}}, found `{text}`"))?;
        let mut mask = Subset::EMPTY;
        if inner.trim().is_empty() {
            return Ok(mask);
        }
        let mut last = 0usize;
        for part in inner.split(',') {
            let e: usize = part
                .trim()
                .parse()
                .map_err(|_| format!("bad element `{part}` in `{text}`"))?;
            if e == 0 || e > MAX_GROUND {
                return Err(format!("element {e} out of range in `{text}`"));
            }
            if e <= last {
                return Err(format!("elements must be strictly ascending in `{text}`"));
            }
            last = e;
            mask = mask.insert(e);
        }
        Ok(mask)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_mask_order() {
        let all: Vec<Subset> = subsets_of(3).collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], Subset::EMPTY);
        assert_eq!(all[3], Subset::from_elements([1, 2]));
        assert_eq!(all[7], Subset::full(3));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in subsets_of(5) {
            assert_eq!(Subset::parse(&s.to_string()).unwrap(), s);
        }
        assert_eq!(Subset::parse("{}").unwrap(), Subset::EMPTY);
        assert!(Subset::parse("{2,1}").is_err());
        assert!(Subset::parse("{0}").is_err());
        assert!(Subset::parse("1,2").is_err());
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_elements([1, 3]);
        let b = Subset::from_elements([3, 4]);
        assert_eq!(a.union(b), Subset::from_elements([1, 3, 4]));
        assert_eq!(a.intersection(b), Subset::singleton(3));
        assert_eq!(a.minus(b), Subset::singleton(1));
        assert!(a.intersection(b).is_subset_of(a));
        assert_eq!(a.complement(4), Subset::from_elements([2, 4]));
        assert_eq!(a.len(), 2);
    }
}

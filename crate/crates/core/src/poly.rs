//! The rank-table representation of a polymatroid.

use crate::subset::{subsets_of, GroundSet, Subset};
use crate::{par, Error, Rank, Result};

/// A polymatroid on `[n]`, stored as a total rank table.
///
/// The table holds one exact rank per subset, indexed by bitmask, and
/// is validated on construction: normalized, non-decreasing, and
/// submodular. Integer polymatroids are the ones whose every rank is
/// integral; a few operations require that and say so.
///
/// Values are immutable after construction, so they can be shared
/// freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Polymatroid {
    n: usize,
    ranks: Vec<Rank>,
    integral: bool,
}

impl std::fmt::Debug for Polymatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Polymatroid(n={}, rank={})",
            self.n,
            self.rank(self.ground().full())
        )
    }
}

impl Polymatroid {
    /// Validates a total rank table given in canonical subset order.
    ///
    /// Returns the first violated axiom, checked in the order:
    /// totality, nonnegativity, normalization, monotonicity,
    /// submodularity. Witnesses are the canonically least pairs.
    pub fn from_ranks(n: usize, ranks: Vec<Rank>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let size = 1usize << n;
        if ranks.len() < size {
            return Err(Error::MissingSubset(Subset(ranks.len() as u32)));
        }
        if ranks.len() > size {
            return Err(Error::DuplicateSubset(Subset(size as u32)));
        }
        if let Some(bad) = ranks.iter().position(|r| r.is_negative()) {
            return Err(Error::NegativeRank(Subset(bad as u32)));
        }
        if !ranks[0].is_zero() {
            return Err(Error::NotNormalized);
        }
        let integral = ranks.iter().all(|r| r.is_integer());
        let poly = Polymatroid { n, ranks, integral };
        poly.check_monotone()?;
        poly.check_submodular()?;
        let _ = ground;
        Ok(poly)
    }

    /// Builds the table from a rank function in one pass, then validates.
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(Subset) -> Rank + Sync + Send,
    {
        GroundSet::new(n)?;
        let ranks = par::map_indexed(1 << n, |mask| f(Subset(mask as u32)));
        Polymatroid::from_ranks(n, ranks)
    }

    fn check_monotone(&self) -> Result<()> {
        let hit = if let Some(ints) = self.int_table() {
            monotone_violation(self.n, move |s| ints[s.index()])
        } else {
            monotone_violation(self.n, |s| self.rank(s))
        };
        match hit {
            Some((a, b)) => Err(Error::NotMonotone { a, b }),
            None => Ok(()),
        }
    }

    fn check_submodular(&self) -> Result<()> {
        let hit = if let Some(ints) = self.int_table() {
            submodular_violation(self.n, move |s| ints[s.index()])
        } else {
            submodular_violation(self.n, |s| self.rank(s))
        };
        match hit {
            Some((a, b)) => Err(Error::NotSubmodular { a, b }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.n).expect("validated at construction")
    }

    pub fn rank(&self, subset: Subset) -> Rank {
        self.ranks[subset.index()]
    }

    /// Total rank `rho(E)`.
    pub fn total_rank(&self) -> Rank {
        self.ranks[self.ranks.len() - 1]
    }

    pub fn singleton_rank(&self, element: usize) -> Rank {
        self.rank(Subset::singleton(element))
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// The whole table as integers, when the polymatroid is integral.
    pub fn int_table(&self) -> Option<Vec<i64>> {
        self.integral
            .then(|| self.ranks.iter().map(|r| r.as_int().unwrap()).collect())
    }

    /// Fails unless every rank is an integer.
    pub fn require_integral(&self) -> Result<()> {
        match self.ranks.iter().position(|r| !r.is_integer()) {
            None => Ok(()),
            Some(mask) => Err(Error::NotIntegral {
                subset: Subset(mask as u32),
                rank: self.ranks[mask].to_string(),
            }),
        }
    }

    /// Elements of rank zero.
    pub fn loops(&self) -> Subset {
        Subset::from_elements((1..=self.n).filter(|&i| self.singleton_rank(i).is_zero()))
    }

    /// The least `k` making this a `k`-polymatroid (0 when `n = 0`).
    pub fn max_singleton_rank(&self) -> Rank {
        (1..=self.n)
            .map(|i| self.singleton_rank(i))
            .max()
            .unwrap_or(Rank::ZERO)
    }

    pub fn is_matroid(&self) -> bool {
        self.integral && (1..=self.n).all(|i| self.singleton_rank(i) <= Rank::int(1))
    }

    /// Minor: delete `delete`, contract `contract`.
    ///
    /// The result lives on the remaining elements, renumbered in
    /// ascending order. Deletion and contraction commute.
    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<Polymatroid> {
        if !delete.intersection(contract).is_empty() {
            return Err(Error::OverlappingSets);
        }
        let removed = delete.union(contract);
        let kept: Vec<usize> = (1..=self.n).filter(|&i| !removed.contains(i)).collect();
        let base = self.rank(contract);
        let m = kept.len();
        let ranks = par::map_indexed(1 << m, |mask| {
            let mut old = contract;
            for (bit, &elem) in kept.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    old = old.insert(elem);
                }
            }
            self.rank(old) - base
        });
        Polymatroid::from_ranks(m, ranks)
    }

    pub fn delete(&self, subset: Subset) -> Result<Polymatroid> {
        self.minor(subset, Subset::EMPTY)
    }

    pub fn contract(&self, subset: Subset) -> Result<Polymatroid> {
        self.minor(Subset::EMPTY, subset)
    }

    /// Restriction to `subset` (deletes the complement).
    pub fn restrict(&self, subset: Subset) -> Result<Polymatroid> {
        self.delete(subset.complement(self.n))
    }

    /// The `k`-dual `rho*(X) = k|X| - rho(E) + rho(E - X)`.
    ///
    /// An involution; needs `rho(i) <= k` for every element.
    pub fn k_dual(&self, k: u32) -> Result<Polymatroid> {
        let kr = Rank::int(k as i64);
        for i in 1..=self.n {
            if self.singleton_rank(i) > kr {
                return Err(Error::KTooSmall { element: i });
            }
        }
        let full = self.ground().full();
        let total = self.total_rank();
        let ranks = par::map_indexed(1 << self.n, |mask| {
            let x = Subset(mask as u32);
            kr * x.len() as i64 - total + self.rank(full.minus(x))
        });
        Polymatroid::from_ranks(self.n, ranks)
    }

    /// Direct sum; the second summand is relabeled to `n1+1 ..= n1+n2`.
    pub fn direct_sum(&self, other: &Polymatroid) -> Result<Polymatroid> {
        let n = self.n + other.n;
        GroundSet::new(n)?;
        let low = Subset::full(self.n);
        let ranks = par::map_indexed(1 << n, |mask| {
            let x = Subset(mask as u32);
            self.rank(x.intersection(low)) + other.rank(Subset((mask >> self.n) as u32))
        });
        Polymatroid::from_ranks(n, ranks)
    }

    /// Multiplies every rank by an exact factor (used for rational
    /// test fixtures; scaling preserves flats and cyclic sets).
    pub fn scale(&self, factor: Rank) -> Result<Polymatroid> {
        if factor.is_negative() {
            return Err(Error::NegativeRank(Subset::EMPTY));
        }
        let ranks = self
            .ranks
            .iter()
            .map(|&r| {
                let num = r.numer() * factor.numer();
                let den = r.denom() * factor.denom();
                Rank::new(num, den)
            })
            .collect();
        Polymatroid::from_ranks(self.n, ranks)
    }

    /// Connectedness: no bipartition `(S, E-S)` with
    /// `rho = rho|S (+) rho|(E-S)`, which for polymatroids is
    /// equivalent to `rho(S) + rho(E-S) = rho(E)` having no nonempty
    /// proper solution. A one-element ground set counts as connected.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if self.n == 1 {
            return Ok(true);
        }
        let full = self.ground().full();
        let total = self.total_rank();
        // wlog element 1 is on the S side
        Ok(par::all_indexed(1 << (self.n - 1), |half| {
            let s = Subset((half as u32) << 1 | 1);
            s == full || self.rank(s) + self.rank(full.minus(s)) != total
        }))
    }

    /// All subsets in canonical order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        subsets_of(self.n)
    }
}

fn monotone_violation<T, G>(n: usize, get: G) -> Option<(Subset, Subset)>
where
    T: Ord + Send,
    G: Fn(Subset) -> T + Sync + Send,
{
    par::first_hit(1 << n, |mask| {
        let x = Subset(mask as u32);
        (1..=n)
            .filter(|&i| !x.contains(i))
            .find(|&i| get(x.insert(i)) < get(x))
            .map(|i| (x, x.insert(i)))
    })
}

// Local (diminishing-returns) criterion: checking all X, i < j outside
// X is equivalent to the pairwise inequality, and a local witness
// (X+i, X+j) is itself a violating pair for it.
fn submodular_violation<T, G>(n: usize, get: G) -> Option<(Subset, Subset)>
where
    T: Ord + Send + std::ops::Add<Output = T>,
    G: Fn(Subset) -> T + Sync + Send,
{
    par::first_hit(1 << n, |mask| {
        let x = Subset(mask as u32);
        for i in 1..=n {
            if x.contains(i) {
                continue;
            }
            for j in i + 1..=n {
                if x.contains(j) {
                    continue;
                }
                let a = x.insert(i);
                let b = x.insert(j);
                if get(a) + get(b) < get(a.union(b)) + get(x) {
                    return Some((a, b));
                }
            }
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn poly(n: usize, ranks: &[i64]) -> Result<Polymatroid> {
        Polymatroid::from_ranks(n, ranks.iter().map(|&v| Rank::int(v)).collect())
    }

    #[test]
    fn zero_table_is_valid() {
        let p = poly(3, &[0; 8]).unwrap();
        assert_eq!(p.loops(), Subset::full(3));
        assert_eq!(p.total_rank(), Rank::ZERO);
        assert!(p.is_matroid());
    }

    #[test]
    fn monotonicity_violation_is_reported_with_witness() {
        // rho({1}) = 1 but rho({1,2}) = 0
        let err = poly(2, &[0, 1, 0, 0]).unwrap_err();
        assert_eq!(
            err,
            Error::NotMonotone {
                a: Subset::from_elements([1]),
                b: Subset::from_elements([1, 2]),
            }
        );
    }

    #[test]
    fn submodularity_violation_is_reported_with_witness() {
        // rho(1)+rho(2) = 2 < rho(12)+rho(0) = 3
        let err = poly(2, &[0, 1, 1, 3]).unwrap_err();
        assert_eq!(
            err,
            Error::NotSubmodular {
                a: Subset::from_elements([1]),
                b: Subset::from_elements([2]),
            }
        );
    }

    #[test]
    fn totality_and_sign_checks() {
        assert_eq!(
            poly(2, &[0, 1, 1]).unwrap_err(),
            Error::MissingSubset(Subset(3))
        );
        assert_eq!(
            poly(1, &[0, 1, 1]).unwrap_err(),
            Error::DuplicateSubset(Subset(2))
        );
        let err = Polymatroid::from_ranks(1, vec![Rank::ZERO, Rank::int(-1)]).unwrap_err();
        assert_eq!(err, Error::NegativeRank(Subset(1)));
        assert_eq!(poly(1, &[1, 1]).unwrap_err(), Error::NotNormalized);
    }

    #[test]
    fn fig2_minor_contract_element_two() {
        let rho = constructions::builtin("fig2poly").unwrap();
        let contracted = rho.minor(Subset::EMPTY, Subset::singleton(2)).unwrap();
        assert_eq!(contracted.n(), 2);
        assert_eq!(contracted.singleton_rank(1), Rank::int(2));
        assert_eq!(contracted.singleton_rank(2), Rank::int(1));
        assert_eq!(contracted.total_rank(), Rank::int(2));
    }

    #[test]
    fn minor_of_nothing_is_identity() {
        let rho = constructions::builtin("fig2poly").unwrap();
        assert_eq!(rho.minor(Subset::EMPTY, Subset::EMPTY).unwrap(), rho);
        assert_eq!(
            rho.minor(Subset::singleton(1), Subset::singleton(1))
                .unwrap_err(),
            Error::OverlappingSets
        );
    }

    #[test]
    fn k_dual_of_u12_is_itself() {
        let u12 = constructions::builtin("uniform(1,2)").unwrap();
        assert_eq!(u12.k_dual(1).unwrap(), u12);
    }

    #[test]
    fn k_dual_requires_large_enough_k() {
        let rho = constructions::builtin("fig2poly").unwrap();
        assert_eq!(rho.k_dual(1).unwrap_err(), Error::KTooSmall { element: 1 });
    }

    #[test]
    fn direct_sum_adds_ranks() {
        let one = poly(1, &[0, 1]).unwrap();
        let sum = one.direct_sum(&one).unwrap();
        assert_eq!(sum.rank(Subset::full(2)), Rank::int(2));
        let empty = poly(0, &[0]).unwrap();
        assert_eq!(one.direct_sum(&empty).unwrap(), one);
    }

    #[test]
    fn connectivity_basics() {
        let rho = constructions::builtin("fig2poly").unwrap();
        assert!(rho.is_connected().unwrap());

        // a loop splits off
        let with_loop = poly(2, &[0, 0, 1, 1]).unwrap();
        assert!(!with_loop.is_connected().unwrap());

        let u11 = poly(1, &[0, 1]).unwrap();
        assert!(!u11.direct_sum(&u11).unwrap().is_connected().unwrap());
        assert!(u11.is_connected().unwrap());
        assert_eq!(
            poly(0, &[0]).unwrap().is_connected().unwrap_err(),
            Error::EmptyGroundSet
        );
    }

    #[test]
    fn scaling_keeps_validity_and_is_exact() {
        let rho = constructions::builtin("fig2poly").unwrap();
        let half = rho.scale(Rank::new(1, 2)).unwrap();
        assert!(!half.is_integral());
        assert_eq!(half.rank(Subset::from_elements([1, 2])), Rank::new(3, 2));
        assert_eq!(half.scale(Rank::int(2)).unwrap(), rho);
    }
}

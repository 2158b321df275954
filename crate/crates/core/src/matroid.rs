//! Matroids as integer polymatroids with singleton ranks at most one,
//! optionally carrying the block structure of a natural matroid.

use crate::subset::Subset;
use crate::{Error, Polymatroid, Rank, Result};

/// Partition of a natural matroid's ground set `E'` into blocks.
///
/// Block `X_i` holds the clones standing in for source element `i`.
/// Element names are fixed as pairs `(i, t)` with `t = 1..|X_i|`,
/// ordered lexicographically, so `E'` is numbered `1..total` with the
/// blocks contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMap {
    sizes: Vec<usize>,
}

impl BlockMap {
    pub fn new(sizes: Vec<usize>) -> BlockMap {
        BlockMap { sizes }
    }

    /// Number of source elements.
    pub fn sources(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, source: usize) -> usize {
        self.sizes[source - 1]
    }

    /// Number of elements of `E'`.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn offset(&self, source: usize) -> usize {
        self.sizes[..source - 1].iter().sum()
    }

    /// The block `X_i` as a subset of `E'`.
    pub fn block(&self, source: usize) -> Subset {
        let lo = self.offset(source);
        Subset::from_elements(lo + 1..=lo + self.sizes[source - 1])
    }

    /// `X_A`: the union of the blocks of the sources in `a`.
    pub fn x_set(&self, a: Subset) -> Subset {
        a.elements()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.block(i)))
    }

    /// Sources whose block meets `y`.
    pub fn touched(&self, y: Subset) -> Subset {
        Subset::from_elements(
            (1..=self.sources()).filter(|&i| !self.block(i).intersection(y).is_empty()),
        )
    }

    /// The pair name `(i, t)` of an element of `E'`.
    pub fn name_of(&self, element: usize) -> (usize, usize) {
        let mut rest = element;
        for (idx, &sz) in self.sizes.iter().enumerate() {
            if rest <= sz {
                return (idx + 1, rest);
            }
            rest -= sz;
        }
        panic!("element {element} outside E'");
    }
}

/// A matroid: an integer polymatroid whose singleton ranks are 0 or 1.
#[derive(Debug, Clone)]
pub struct Matroid {
    poly: Polymatroid,
    blocks: Option<BlockMap>,
}

impl Matroid {
    pub fn new(poly: Polymatroid) -> Result<Matroid> {
        poly.require_integral()?;
        for i in 1..=poly.n() {
            if poly.singleton_rank(i) > Rank::int(1) {
                return Err(Error::NotAMatroid { element: i });
            }
        }
        Ok(Matroid { poly, blocks: None })
    }

    pub fn with_blocks(poly: Polymatroid, blocks: BlockMap) -> Result<Matroid> {
        if blocks.total() != poly.n() {
            return Err(Error::BlockSizeMismatch {
                element: 0,
                got: blocks.total(),
                expected: poly.n().to_string(),
            });
        }
        let mut m = Matroid::new(poly)?;
        m.blocks = Some(blocks);
        Ok(m)
    }

    pub fn poly(&self) -> &Polymatroid {
        &self.poly
    }

    pub fn blocks(&self) -> Option<&BlockMap> {
        self.blocks.as_ref()
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn rank(&self, subset: Subset) -> i64 {
        self.poly
            .rank(subset)
            .as_int()
            .expect("matroid ranks are integers")
    }

    pub fn total_rank(&self) -> i64 {
        self.rank(Subset::full(self.n()))
    }

    pub fn is_independent(&self, subset: Subset) -> bool {
        self.rank(subset) == subset.len() as i64
    }

    pub fn is_basis(&self, subset: Subset) -> bool {
        self.is_independent(subset) && self.rank(subset) == self.total_rank()
    }

    pub fn is_circuit(&self, subset: Subset) -> bool {
        !self.is_independent(subset)
            && subset
                .elements()
                .all(|e| self.is_independent(subset.remove(e)))
    }

    /// All bases, in canonical subset order.
    pub fn set_bases(&self) -> Vec<Subset> {
        self.poly.subsets().filter(|&s| self.is_basis(s)).collect()
    }

    /// All circuits, in canonical subset order.
    pub fn set_circuits(&self) -> Vec<Subset> {
        self.poly
            .subsets()
            .filter(|&s| self.is_circuit(s))
            .collect()
    }

    /// Whether swapping `a` and `b` is an automorphism (the clone test).
    pub fn is_clone_pair(&self, a: usize, b: usize) -> bool {
        let pair = Subset::singleton(a).union(Subset::singleton(b));
        self.poly.subsets().all(|s| {
            let hit = s.intersection(pair);
            if hit.is_empty() || hit == pair {
                true
            } else {
                self.poly.rank(s) == self.poly.rank(Subset(s.0 ^ pair.0))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_layout_is_lexicographic() {
        let blocks = BlockMap::new(vec![2, 0, 3]);
        assert_eq!(blocks.total(), 5);
        assert_eq!(blocks.block(1), Subset::from_elements([1, 2]));
        assert_eq!(blocks.block(2), Subset::EMPTY);
        assert_eq!(blocks.block(3), Subset::from_elements([3, 4, 5]));
        assert_eq!(blocks.name_of(4), (3, 2));
        assert_eq!(
            blocks.x_set(Subset::from_elements([1, 3])),
            Subset::from_elements([1, 2, 3, 4, 5])
        );
        assert_eq!(
            blocks.touched(Subset::from_elements([2, 4])),
            Subset::from_elements([1, 3])
        );
    }

    #[test]
    fn rejects_elements_above_rank_one() {
        let table = vec![Rank::ZERO, Rank::int(2), Rank::int(1), Rank::int(2)];
        let poly = Polymatroid::from_ranks(2, table).unwrap();
        assert_eq!(
            Matroid::new(poly).unwrap_err(),
            Error::NotAMatroid { element: 1 }
        );
    }

    #[test]
    fn uniform_bases_and_circuits() {
        let u23 = crate::constructions::builtin("uniform(2,3)").unwrap();
        let m = Matroid::new(u23).unwrap();
        assert_eq!(m.set_bases().len(), 3);
        assert_eq!(m.set_circuits(), vec![Subset::full(3)]);
        assert!(m.is_clone_pair(1, 3));
    }
}

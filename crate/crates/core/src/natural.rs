//! The natural matroid of an integer polymatroid.
//!
//! Every element `i` of rank `rho(i)` becomes a block `X_i` of that
//! many clones, and the matroid on `E' = X_E` has rank
//! `r(Y) = min { rho(A) + |Y - X_A| : A subset of E }`. The blocks tie
//! the vector view of the polymatroid to the set view of the matroid:
//! a subset of `E'` is independent exactly when its type vector is an
//! independent vector of `rho`.

use crate::matroid::{BlockMap, Matroid};
use crate::subset::{subsets_of, GroundSet, Subset};
use crate::vectors::IntVector;
use crate::{par, zflats, Error, Polymatroid, Result};

/// The canonical block layout of `rho`: block `i` has `rho(i)` clones.
pub fn block_map(rho: &Polymatroid) -> Result<BlockMap> {
    rho.require_integral()?;
    Ok(BlockMap::new(
        (1..=rho.n())
            .map(|i| rho.singleton_rank(i).as_int().unwrap() as usize)
            .collect(),
    ))
}

/// Builds the natural matroid `M_rho` with its blocks.
///
/// Needs `sum rho(i) <= 20` so the rank table stays explicit.
pub fn build_natural_matroid(rho: &Polymatroid) -> Result<Matroid> {
    let blocks = block_map(rho)?;
    let total = blocks.total();
    GroundSet::new(total)?;
    let ints = rho.int_table().unwrap();
    let x_sets: Vec<Subset> = subsets_of(rho.n()).map(|a| blocks.x_set(a)).collect();
    let ranks = par::map_indexed(1 << total, |mask| {
        let y = Subset(mask as u32);
        let r = x_sets
            .iter()
            .enumerate()
            .map(|(a, &xa)| ints[a] + y.minus(xa).len() as i64)
            .min()
            .unwrap();
        crate::Rank::int(r)
    });
    Matroid::with_blocks(Polymatroid::from_ranks(total, ranks)?, blocks)
}

/// Independence in `M_rho` straight from the polymatroid:
/// `|I ∩ X_A| <= rho(A)` for every `A`.
pub fn natural_independent(rho: &Polymatroid, blocks: &BlockMap, i_set: Subset) -> Result<bool> {
    rho.require_integral()?;
    if let Some(stray) = i_set.minus(Subset::full(blocks.total())).elements().next() {
        return Err(Error::UnknownElement(stray));
    }
    Ok(subsets_of(rho.n()).all(|a| {
        let hit = i_set.intersection(blocks.x_set(a)).len() as i64;
        crate::Rank::int(hit) <= rho.rank(a)
    }))
}

/// The type vector `T(V)`: per-block intersection counts.
pub fn type_vector(blocks: &BlockMap, v: Subset) -> Result<IntVector> {
    if let Some(stray) = v.minus(Subset::full(blocks.total())).elements().next() {
        return Err(Error::UnknownElement(stray));
    }
    Ok(IntVector::new(
        (1..=blocks.sources())
            .map(|i| blocks.block(i).intersection(v).len() as u32)
            .collect(),
    ))
}

/// Verdict of [`verify_natural`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalCheck {
    /// Whether the matroid is the natural matroid of the polymatroid.
    pub ok: bool,
    /// A cyclic flat that is not block-closed or has the wrong rank.
    pub offending_cyclic_flat: Option<Subset>,
    /// The clone half of the criterion: each `X_i` is a set of clones.
    pub clones_ok: bool,
}

/// Decides whether `m` is the natural matroid of `rho`.
///
/// Uses the cyclic-flat criterion (every cyclic flat is some `X_A`
/// with rank `rho(A)`) and cross-checks it against the equivalent
/// clone-based one. Blocks default to the canonical layout when the
/// matroid carries none.
pub fn verify_natural(m: &Matroid, rho: &Polymatroid) -> Result<NaturalCheck> {
    let blocks = match m.blocks() {
        Some(b) => b.clone(),
        None => block_map(rho)?,
    };
    rho.require_integral()?;
    for i in 1..=rho.n() {
        let expected = rho.singleton_rank(i);
        if crate::Rank::int(blocks.size(i) as i64) != expected {
            return Err(Error::BlockSizeMismatch {
                element: i,
                got: blocks.size(i),
                expected: expected.to_string(),
            });
        }
    }
    if blocks.total() != m.n() {
        return Err(Error::BlockSizeMismatch {
            element: 0,
            got: m.n(),
            expected: blocks.total().to_string(),
        });
    }

    let mut offending = None;
    for z in m.poly().subsets() {
        if !zflats::is_flat(m.poly(), z) || !zflats::is_cyclic(m.poly(), z) {
            continue;
        }
        let a = blocks.touched(z);
        if blocks.x_set(a) != z || m.poly().rank(z) != rho.rank(a) {
            offending = Some(z);
            break;
        }
    }
    let flats_route_ok = offending.is_none();

    let clones_ok = (1..=rho.n()).all(|i| {
        let members: Vec<usize> = blocks.block(i).elements().collect();
        members
            .iter()
            .enumerate()
            .all(|(k, &a)| members[k + 1..].iter().all(|&b| m.is_clone_pair(a, b)))
    });
    let block_closed_ranks_ok = m.poly().subsets().all(|z| {
        if !zflats::is_flat(m.poly(), z) || !zflats::is_cyclic(m.poly(), z) {
            return true;
        }
        let a = blocks.touched(z);
        blocks.x_set(a) != z || m.poly().rank(z) == rho.rank(a)
    });
    let clones_route_ok = clones_ok && block_closed_ranks_ok;
    assert_eq!(
        flats_route_ok, clones_route_ok,
        "the two criteria are equivalent"
    );

    Ok(NaturalCheck {
        ok: flats_route_ok,
        offending_cyclic_flat: offending,
        clones_ok,
    })
}

/// Matroid union on a common ground set:
/// `r'(Y) = min { sum_j r_j(X) + |Y - X| : X subset of Y }`.
pub fn matroid_union(matroids: &[Matroid]) -> Result<Matroid> {
    let first = matroids.first().ok_or(Error::NotNonempty)?;
    let n = first.n();
    if matroids.iter().any(|m| m.n() != n) {
        return Err(Error::GroundSetMismatch);
    }
    let tables: Vec<Vec<i64>> = matroids
        .iter()
        .map(|m| m.poly().int_table().unwrap())
        .collect();
    let ranks = par::map_indexed(1 << n, |y| {
        let mut best = i64::MAX;
        let mut x = y;
        loop {
            let joint: i64 = tables.iter().map(|t| t[x]).sum();
            best = best.min(joint + (y & !x).count_ones() as i64);
            if x == 0 {
                break;
            }
            x = (x - 1) & y;
        }
        crate::Rank::int(best)
    });
    Matroid::new(Polymatroid::from_ranks(n, ranks)?)
}

/// Builds the natural matroid of a decomposed polymatroid
/// `rho = r_1 + .. + r_k` as a matroid union: each `M_j` gets the
/// elements of `X_i` parallel to `i` (loops when `r_j(i) = 0`), loses
/// `i` itself, and the union of these extensions is checked against
/// the direct construction.
pub fn natural_from_decomposition(matroids: &[Matroid], rho: &Polymatroid) -> Result<Matroid> {
    if matroids.is_empty() {
        return Err(Error::NotNonempty);
    }
    if matroids.iter().any(|m| m.n() != rho.n()) {
        return Err(Error::GroundSetMismatch);
    }
    rho.require_integral()?;
    for a in rho.subsets() {
        let sum: crate::Rank = matroids.iter().map(|m| m.poly().rank(a)).sum();
        if sum != rho.rank(a) {
            return Err(Error::NotADecomposition(a));
        }
    }

    let blocks = block_map(rho)?;
    let total = blocks.total();
    GroundSet::new(total)?;
    let extended: Vec<Matroid> = matroids
        .iter()
        .map(|m| {
            let table = m.poly().int_table().unwrap();
            let ranks = par::map_indexed(1 << total, |mask| {
                let touched = blocks.touched(Subset(mask as u32));
                crate::Rank::int(table[touched.index()])
            });
            Matroid::new(Polymatroid::from_ranks(total, ranks)?)
        })
        .collect::<Result<_>>()?;
    let union = matroid_union(&extended)?;

    let direct = build_natural_matroid(rho)?;
    assert_eq!(
        union.poly(),
        direct.poly(),
        "matroid union of the extensions must equal the natural matroid"
    );
    Matroid::with_blocks(union.poly().clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtin;
    use crate::Rank;

    #[test]
    fn fig2_natural_matroid() {
        let rho = builtin("fig2poly").unwrap();
        let m = build_natural_matroid(&rho).unwrap();
        assert_eq!(m.n(), 5);
        assert_eq!(m.total_rank(), 3);
        // X_2 ∪ X_3 = {3,4,5} realizes the circuit (0,1,2)
        let c = Subset::from_elements([3, 4, 5]);
        assert!(m.is_circuit(c));
        let blocks = m.blocks().unwrap();
        assert_eq!(blocks.block(2).union(blocks.block(3)), c);
    }

    #[test]
    fn zero_polymatroid_gives_the_empty_matroid() {
        let zero = Polymatroid::from_ranks(3, vec![Rank::ZERO; 8]).unwrap();
        let m = build_natural_matroid(&zero).unwrap();
        assert_eq!(m.n(), 0);
        assert_eq!(m.total_rank(), 0);
    }

    #[test]
    fn independence_through_blocks_and_ranks_agrees() {
        let rho = builtin("fig2poly").unwrap();
        let m = build_natural_matroid(&rho).unwrap();
        let blocks = m.blocks().unwrap();
        for s in m.poly().subsets() {
            assert_eq!(
                natural_independent(&rho, blocks, s).unwrap(),
                m.is_independent(s)
            );
        }
        assert!(natural_independent(&rho, blocks, Subset::from_elements([1, 2, 3])).unwrap());
        assert!(natural_independent(&rho, blocks, Subset::EMPTY).unwrap());
        assert!(!natural_independent(&rho, blocks, Subset::from_elements([3, 4, 5])).unwrap());
        assert_eq!(
            natural_independent(&rho, blocks, Subset::from_elements([6])).unwrap_err(),
            Error::UnknownElement(6)
        );
    }

    #[test]
    fn type_vectors_count_block_hits() {
        let rho = builtin("fig2poly").unwrap();
        let m = build_natural_matroid(&rho).unwrap();
        let blocks = m.blocks().unwrap();
        assert_eq!(
            type_vector(blocks, Subset::full(5)).unwrap(),
            IntVector::new(vec![2, 1, 2])
        );
        assert_eq!(
            type_vector(blocks, Subset::EMPTY).unwrap(),
            IntVector::zero(3)
        );
        assert_eq!(
            type_vector(blocks, Subset::from_elements([1, 2, 3])).unwrap(),
            IntVector::new(vec![2, 1, 0])
        );
    }

    #[test]
    fn fig1_type_vector_example() {
        let rho = builtin("fig1poly").unwrap();
        let blocks = block_map(&rho).unwrap();
        // x1 = (1,1), x3 = (3,1), y4 = (4,2)
        let v = Subset::from_elements([1, 3, 6]);
        assert_eq!(
            type_vector(&blocks, v).unwrap(),
            IntVector::new(vec![1, 0, 1, 1, 0, 0, 0])
        );
    }

    #[test]
    fn verify_accepts_the_construction_and_rejects_a_relabeling() {
        let rho = builtin("fig2poly").unwrap();
        let m = build_natural_matroid(&rho).unwrap();
        let check = verify_natural(&m, &rho).unwrap();
        assert!(check.ok && check.clones_ok);

        // swap elements 2 (in X_1) and 3 (= X_2): blocks keep their
        // sizes but no longer match the matroid
        let pair = Subset::from_elements([2, 3]);
        let swapped = Polymatroid::from_fn(5, |s| {
            let hit = s.intersection(pair);
            if hit.is_empty() || hit == pair {
                m.poly().rank(s)
            } else {
                m.poly().rank(Subset(s.0 ^ pair.0))
            }
        })
        .unwrap();
        let bad = Matroid::with_blocks(swapped, m.blocks().unwrap().clone()).unwrap();
        let check = verify_natural(&bad, &rho).unwrap();
        assert!(!check.ok && !check.clones_ok);
        assert_eq!(
            check.offending_cyclic_flat,
            Some(Subset::from_elements([2, 4, 5]))
        );
    }

    #[test]
    fn u3_14_with_pair_blocks_is_the_natural_matroid_of_the_lines() {
        let lines = crate::constructions::pg22_lines();
        let u314 = builtin("uniform(3,14)").unwrap();
        let m = Matroid::with_blocks(u314, BlockMap::new(vec![2; 7])).unwrap();
        let check = verify_natural(&m, &lines).unwrap();
        assert!(check.ok && check.clones_ok);
    }

    #[test]
    fn verify_rejects_wrong_block_sizes() {
        let rho = builtin("fig2poly").unwrap();
        let m = build_natural_matroid(&rho).unwrap();
        let bad_blocks = BlockMap::new(vec![1, 2, 2]);
        let bad = Matroid::with_blocks(m.poly().clone(), bad_blocks).unwrap();
        assert_eq!(
            verify_natural(&bad, &rho).unwrap_err(),
            Error::BlockSizeMismatch {
                element: 1,
                got: 1,
                expected: "2".into()
            }
        );
    }

    #[test]
    fn union_of_two_u12_is_u22() {
        let u12 = Matroid::new(builtin("uniform(1,2)").unwrap()).unwrap();
        let union = matroid_union(&[u12.clone(), u12]).unwrap();
        assert_eq!(union.poly(), &builtin("uniform(2,2)").unwrap());
    }

    #[test]
    fn union_with_rank_zero_is_identity() {
        let m = Matroid::new(builtin("uniform(2,3)").unwrap()).unwrap();
        let zero = Matroid::new(Polymatroid::from_ranks(3, vec![Rank::ZERO; 8]).unwrap()).unwrap();
        let union = matroid_union(&[m.clone(), zero]).unwrap();
        assert_eq!(union.poly(), m.poly());
        assert_eq!(matroid_union(&[]).unwrap_err(), Error::NotNonempty);
    }

    #[test]
    fn union_independent_sets_are_unions_of_independents() {
        let u12 = Matroid::new(builtin("uniform(1,2)").unwrap()).unwrap();
        let parts = [u12.clone(), u12];
        let union = matroid_union(&parts).unwrap();
        for y in union.poly().subsets() {
            // brute-force: can y be split into one independent set per part?
            let splittable = subsets_of(2).any(|i1| {
                i1.is_subset_of(y)
                    && parts[0].is_independent(i1)
                    && parts[1].is_independent(y.minus(i1))
            });
            assert_eq!(union.is_independent(y), splittable);
        }
    }

    #[test]
    fn trivial_decomposition_reproduces_the_matroid() {
        let u23 = Matroid::new(builtin("uniform(2,3)").unwrap()).unwrap();
        let m = natural_from_decomposition(std::slice::from_ref(&u23), u23.poly()).unwrap();
        assert_eq!(m.poly(), u23.poly());
        assert_eq!(m.blocks().unwrap().sizes(), &[1, 1, 1]);
    }

    #[test]
    fn decomposition_must_sum_to_rho() {
        let u12 = Matroid::new(builtin("uniform(1,2)").unwrap()).unwrap();
        let err = natural_from_decomposition(
            std::slice::from_ref(&u12),
            &builtin("uniform(2,2)").unwrap(),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotADecomposition(Subset::full(2)));
    }

    #[test]
    fn fig2_decomposition_found_by_search_yields_the_natural_matroid() {
        let rho = builtin("fig2poly").unwrap();
        // exhaustive search over pairs of matroids on 3 elements
        let all = crate::constructions::all_matroids(3);
        let mut found = None;
        'outer: for m1 in &all {
            for m2 in &all {
                if rho
                    .subsets()
                    .all(|a| m1.poly().rank(a) + m2.poly().rank(a) == rho.rank(a))
                {
                    found = Some((m1.clone(), m2.clone()));
                    break 'outer;
                }
            }
        }
        let (m1, m2) = found.expect("fig2poly decomposes into two matroids");
        let via_union = natural_from_decomposition(&[m1, m2], &rho).unwrap();
        let direct = build_natural_matroid(&rho).unwrap();
        assert_eq!(via_union.poly(), direct.poly());
    }
}

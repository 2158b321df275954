//! Flats, cyclic sets, and the ranked cyclic-flat lattice.
//!
//! This is the one module that works with general (rational-rank)
//! polymatroids, because the cyclic-flat characterization holds at
//! that generality. A flat strictly gains rank on adding any outside
//! element; a set is cyclic when no positive-rank element separates:
//! `rho(A) < rho(A - i) + rho(i)` for every such `i` in `A`. The
//! cyclic flats with their ranks (plus all singleton ranks) determine
//! the polymatroid through
//! `rho(A) = min { rho'(X) + sum_{i in A - X} rho'(i) : X in Z }`.

use crate::subset::Subset;
use crate::vectors::{AxiomOutcome, AxiomReport};
use crate::{par, Error, Polymatroid, Rank, Result};

pub fn is_flat(rho: &Polymatroid, a: Subset) -> bool {
    let ra = rho.rank(a);
    (1..=rho.n()).all(|i| a.contains(i) || rho.rank(a.insert(i)) > ra)
}

/// All flats, in canonical subset order.
pub fn flats(rho: &Polymatroid) -> Vec<Subset> {
    rho.subsets().filter(|&a| is_flat(rho, a)).collect()
}

/// The least flat containing `a`: `{ i : rho(A + i) = rho(A) }`.
pub fn closure(rho: &Polymatroid, a: Subset) -> Subset {
    let ra = rho.rank(a);
    Subset::from_elements((1..=rho.n()).filter(|&i| rho.rank(a.insert(i)) == ra))
}

pub fn is_cyclic(rho: &Polymatroid, a: Subset) -> bool {
    a.elements().all(|i| {
        let ri = rho.singleton_rank(i);
        ri.is_zero() || rho.rank(a) < rho.rank(a.remove(i)) + ri
    })
}

/// All cyclic sets, in canonical subset order.
pub fn cyclic_sets(rho: &Polymatroid) -> Vec<Subset> {
    rho.subsets().filter(|&a| is_cyclic(rho, a)).collect()
}

/// The greatest cyclic subset of `a`: drops every positive-rank
/// element whose rank splits off.
pub fn cy(rho: &Polymatroid, a: Subset) -> Subset {
    let separated: Vec<usize> = a
        .elements()
        .filter(|&i| {
            let ri = rho.singleton_rank(i);
            !ri.is_zero() && rho.rank(a) == rho.rank(a.remove(i)) + ri
        })
        .collect();
    separated.into_iter().fold(a, |acc, i| acc.remove(i))
}

pub fn is_cyclic_flat(rho: &Polymatroid, a: Subset) -> bool {
    is_flat(rho, a) && is_cyclic(rho, a)
}

/// The lattice `Z_rho` of cyclic flats, with its ranks.
///
/// Meet and join come from the operators — `cy(A ∩ B)` and
/// `cl(A ∪ B)` — and construction asserts they land back in the
/// family instead of assuming it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFlatLattice {
    n: usize,
    members: Vec<Subset>,
    ranks: Vec<Rank>,
}

impl CyclicFlatLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn contains(&self, z: Subset) -> bool {
        self.members.binary_search(&z).is_ok()
    }

    pub fn rank_of(&self, z: Subset) -> Option<Rank> {
        self.members.binary_search(&z).ok().map(|i| self.ranks[i])
    }
}

/// Scans the rank table for all cyclic flats.
pub fn cyclic_flat_lattice(rho: &Polymatroid) -> CyclicFlatLattice {
    let members: Vec<Subset> = rho.subsets().filter(|&a| is_cyclic_flat(rho, a)).collect();
    let ranks = members.iter().map(|&z| rho.rank(z)).collect();
    let lattice = CyclicFlatLattice {
        n: rho.n(),
        members,
        ranks,
    };
    for &a in &lattice.members {
        for &b in &lattice.members {
            debug_assert!(lattice.contains(cy(rho, a.intersection(b))));
            debug_assert!(lattice.contains(closure(rho, a.union(b))));
        }
    }
    lattice
}

/// A candidate pair `(Z, rho')`: flats with ranks, plus singleton
/// ranks when the polymatroid axioms are to be checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedFamily {
    n: usize,
    flats: Vec<(Subset, Rank)>,
    singletons: Option<Vec<Rank>>,
}

impl RankedFamily {
    pub fn new(n: usize, mut flats: Vec<(Subset, Rank)>, singletons: Option<Vec<Rank>>) -> Self {
        flats.sort_by_key(|&(z, _)| z);
        flats.dedup_by_key(|&mut (z, _)| z);
        if let Some(s) = &singletons {
            assert_eq!(s.len(), n, "one singleton rank per element");
        }
        RankedFamily {
            n,
            flats,
            singletons,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[(Subset, Rank)] {
        &self.flats
    }

    pub fn singletons(&self) -> Option<&[Rank]> {
        self.singletons.as_deref()
    }

    pub fn singleton_rank(&self, element: usize) -> Option<Rank> {
        self.singletons.as_ref().map(|s| s[element - 1])
    }
}

/// The `(Z, rho')` pair of a polymatroid: its cyclic flats with their
/// ranks and all singleton ranks.
pub fn ranked_family(rho: &Polymatroid) -> RankedFamily {
    let lattice = cyclic_flat_lattice(rho);
    RankedFamily::new(
        rho.n(),
        lattice
            .members()
            .iter()
            .zip(lattice.ranks())
            .map(|(&z, &r)| (z, r))
            .collect(),
        Some((1..=rho.n()).map(|i| rho.singleton_rank(i)).collect()),
    )
}

/// Which axiom system to check on a ranked family.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ZMode {
    /// (Z0)-(Z3): cyclic flats of a matroid; integer ranks on `Z` only.
    Matroid,
    /// (PZ0)-(PZ4): cyclic flats of a polymatroid; needs singleton
    /// ranks, rationals allowed.
    Polymatroid,
}

// meet/join inside the family by inclusion alone: the unique maximal
// lower bound / minimal upper bound, when they exist
fn inclusion_meet_join(
    flats: &[(Subset, Rank)],
    a: Subset,
    b: Subset,
) -> (Option<usize>, Option<usize>) {
    let lower: Vec<usize> = (0..flats.len())
        .filter(|&k| flats[k].0.is_subset_of(a.intersection(b)))
        .collect();
    let upper: Vec<usize> = (0..flats.len())
        .filter(|&k| a.union(b).is_subset_of(flats[k].0))
        .collect();
    let maximal: Vec<usize> = lower
        .iter()
        .copied()
        .filter(|&k| {
            !lower
                .iter()
                .any(|&j| j != k && flats[k].0.is_subset_of(flats[j].0))
        })
        .collect();
    let minimal: Vec<usize> = upper
        .iter()
        .copied()
        .filter(|&k| {
            !upper
                .iter()
                .any(|&j| j != k && flats[j].0.is_subset_of(flats[k].0))
        })
        .collect();
    (
        (maximal.len() == 1).then(|| maximal[0]),
        (minimal.len() == 1).then(|| minimal[0]),
    )
}

/// Checks the cyclic-flat axioms, (Z0)-(Z3) or (PZ0)-(PZ4).
///
/// The lattice axiom verifies a well-defined meet and join for every
/// pair; when it fails the dependent axioms are reported as skipped.
pub fn check_z_axioms(family: &RankedFamily, mode: ZMode) -> Result<AxiomReport> {
    for &(z, r) in family.flats() {
        if r.is_negative() {
            return Err(Error::NegativeRank(z));
        }
        if mode == ZMode::Matroid && !r.is_integer() {
            return Err(Error::NotIntegral {
                subset: z,
                rank: r.to_string(),
            });
        }
    }
    if mode == ZMode::Polymatroid {
        match family.singletons() {
            None => return Err(Error::RankDomainMismatch),
            Some(s) => {
                if let Some(i) = s.iter().position(|r| r.is_negative()) {
                    return Err(Error::NegativeRank(Subset::singleton(i + 1)));
                }
            }
        }
    }
    match mode {
        ZMode::Matroid => check_matroid_axioms(family),
        ZMode::Polymatroid => check_polymatroid_axioms(family),
    }
}

fn lattice_outcome(family: &RankedFamily) -> (AxiomOutcome, bool) {
    if family.flats().is_empty() {
        return (AxiomOutcome::Fail("the family is empty".into()), false);
    }
    let flats = family.flats();
    for (ka, &(a, _)) in flats.iter().enumerate() {
        for &(b, _) in &flats[ka + 1..] {
            let (meet, join) = inclusion_meet_join(flats, a, b);
            if meet.is_none() {
                return (
                    AxiomOutcome::Fail(format!("A={a} B={b}: no meet under inclusion")),
                    false,
                );
            }
            if join.is_none() {
                return (
                    AxiomOutcome::Fail(format!("A={a} B={b}: no join under inclusion")),
                    false,
                );
            }
        }
    }
    (AxiomOutcome::Pass, true)
}

fn least_member(family: &RankedFamily) -> (Subset, Rank) {
    // with (Z0) verified, the unique minimal member is the minimum
    *family
        .flats()
        .iter()
        .find(|(z, _)| {
            family
                .flats()
                .iter()
                .all(|(w, _)| z.is_subset_of(*w) || !w.is_subset_of(*z))
        })
        .expect("nonempty lattice has a least element")
}

fn check_matroid_axioms(family: &RankedFamily) -> Result<AxiomReport> {
    let (z0, lattice_ok) = lattice_outcome(family);
    if !lattice_ok {
        return Ok(AxiomReport::new(vec![
            ("Z0", z0),
            ("Z1", AxiomOutcome::Skipped),
            ("Z2", AxiomOutcome::Skipped),
            ("Z3", AxiomOutcome::Skipped),
        ]));
    }
    let flats = family.flats();

    let (bottom, bottom_rank) = least_member(family);
    let z1 = if bottom_rank.is_zero() {
        AxiomOutcome::Pass
    } else {
        AxiomOutcome::Fail(format!("least element {bottom} has rank {bottom_rank}"))
    };

    let mut z2 = AxiomOutcome::Pass;
    'z2: for &(a, ra) in flats {
        for &(b, rb) in flats {
            if a != b && a.is_subset_of(b) {
                let gap = rb - ra;
                if !(Rank::ZERO < gap && gap < Rank::int(b.minus(a).len() as i64)) {
                    z2 = AxiomOutcome::Fail(format!("A={a} B={b}"));
                    break 'z2;
                }
            }
        }
    }

    let mut z3 = AxiomOutcome::Pass;
    'z3: for (ka, &(a, ra)) in flats.iter().enumerate() {
        for &(b, rb) in &flats[ka..] {
            let (meet, join) = inclusion_meet_join(flats, a, b);
            let (km, kj) = (meet.unwrap(), join.unwrap());
            let slack = Rank::int(a.intersection(b).minus(flats[km].0).len() as i64);
            if flats[kj].1 + flats[km].1 + slack > ra + rb {
                z3 = AxiomOutcome::Fail(format!("A={a} B={b}"));
                break 'z3;
            }
        }
    }

    Ok(AxiomReport::new(vec![
        ("Z0", z0),
        ("Z1", z1),
        ("Z2", z2),
        ("Z3", z3),
    ]))
}

fn check_polymatroid_axioms(family: &RankedFamily) -> Result<AxiomReport> {
    let (pz0, lattice_ok) = lattice_outcome(family);
    if !lattice_ok {
        return Ok(AxiomReport::new(vec![
            ("PZ0", pz0),
            ("PZ1", AxiomOutcome::Skipped),
            ("PZ2", AxiomOutcome::Skipped),
            ("PZ3", AxiomOutcome::Skipped),
            ("PZ4", AxiomOutcome::Skipped),
        ]));
    }
    let flats = family.flats();
    let single = |i: usize| family.singleton_rank(i).unwrap();
    let sum_over = |s: Subset| -> Rank { s.elements().map(single).sum() };

    let (bottom, bottom_rank) = least_member(family);
    let zero_set = Subset::from_elements((1..=family.n()).filter(|&i| single(i).is_zero()));
    let pz1 = if bottom == zero_set && bottom_rank.is_zero() {
        AxiomOutcome::Pass
    } else {
        AxiomOutcome::Fail(format!(
            "least element {bottom} (rank {bottom_rank}) differs from the zero-rank set {zero_set}"
        ))
    };

    let mut pz2 = AxiomOutcome::Pass;
    'pz2: for &(a, ra) in flats {
        for &(b, rb) in flats {
            if a != b && a.is_subset_of(b) {
                let gap = rb - ra;
                if !(Rank::ZERO < gap && gap < sum_over(b.minus(a))) {
                    pz2 = AxiomOutcome::Fail(format!("A={a} B={b}"));
                    break 'pz2;
                }
            }
        }
    }

    let mut pz3 = AxiomOutcome::Pass;
    'pz3: for (ka, &(a, ra)) in flats.iter().enumerate() {
        for &(b, rb) in &flats[ka..] {
            let (meet, join) = inclusion_meet_join(flats, a, b);
            let (km, kj) = (meet.unwrap(), join.unwrap());
            let slack = sum_over(a.intersection(b).minus(flats[km].0));
            if flats[kj].1 + flats[km].1 + slack > ra + rb {
                pz3 = AxiomOutcome::Fail(format!("A={a} B={b}"));
                break 'pz3;
            }
        }
    }

    let mut pz4 = AxiomOutcome::Pass;
    'pz4: for &(a, ra) in flats {
        for i in a.elements() {
            if single(i) > ra {
                pz4 = AxiomOutcome::Fail(format!("A={a} i={i}"));
                break 'pz4;
            }
        }
    }

    Ok(AxiomReport::new(vec![
        ("PZ0", pz0),
        ("PZ1", pz1),
        ("PZ2", pz2),
        ("PZ3", pz3),
        ("PZ4", pz4),
    ]))
}

/// Rebuilds the polymatroid from its ranked cyclic flats through the
/// min formula. The family must pass the (PZ) axioms.
pub fn polymatroid_from_cyclic_flats(family: &RankedFamily) -> Result<Polymatroid> {
    let report = check_z_axioms(family, ZMode::Polymatroid)?;
    if !report.ok() {
        return Err(Error::AxiomsFailed(report.to_string()));
    }
    let singles: Vec<Rank> = (1..=family.n())
        .map(|i| family.singleton_rank(i).unwrap())
        .collect();
    let flats = family.flats().to_vec();
    let n = family.n();
    let ranks = par::map_indexed(1 << n, |mask| {
        let a = Subset(mask as u32);
        flats
            .iter()
            .map(|&(x, rx)| rx + a.minus(x).elements().map(|i| singles[i - 1]).sum::<Rank>())
            .min()
            .unwrap()
    });
    Polymatroid::from_ranks(n, ranks)
}

/// `R_rho(A)` with the structure facts of the minimizer family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSetReport {
    /// Minimizing cyclic flats, sorted by (cardinality, canonical order).
    pub members: Vec<Subset>,
    /// `cl(cy(A))`, the least member.
    pub least: Subset,
    /// `cy(cl(A))`, the greatest member.
    pub greatest: Subset,
    /// (I)+(II): both operators minimize and sandwich every member.
    pub bounds_ok: bool,
    /// (III): closed under the lattice meet and join.
    pub sublattice_ok: bool,
    /// (IV): every pair of members is a modular pair.
    pub modular_ok: bool,
}

/// Computes `R_rho(A)`: the cyclic flats `B` minimizing
/// `rho(B) + sum_{i in A-B} rho(i)`, and verifies the structure
/// facts on the minimizers.
pub fn r_set(rho: &Polymatroid, a: Subset) -> RSetReport {
    let lattice = cyclic_flat_lattice(rho);
    let price = |b: Subset| -> Rank {
        rho.rank(b)
            + a.minus(b)
                .elements()
                .map(|i| rho.singleton_rank(i))
                .sum::<Rank>()
    };
    let best = lattice.members().iter().map(|&b| price(b)).min().unwrap();
    debug_assert_eq!(best, rho.rank(a), "the min formula recovers the rank");
    let mut members: Vec<Subset> = lattice
        .members()
        .iter()
        .copied()
        .filter(|&b| price(b) == best)
        .collect();
    members.sort_by_key(|&z| (z.len(), z));

    let least = closure(rho, cy(rho, a));
    let greatest = cy(rho, closure(rho, a));
    let bounds_ok = members.contains(&least)
        && members.contains(&greatest)
        && members
            .iter()
            .all(|&b| least.is_subset_of(b) && b.is_subset_of(greatest));
    let sublattice_ok = members.iter().all(|&b| {
        members.iter().all(|&c| {
            members.contains(&cy(rho, b.intersection(c)))
                && members.contains(&closure(rho, b.union(c)))
        })
    });
    let modular_ok = members.iter().all(|&b| {
        members.iter().all(|&c| {
            rho.rank(b) + rho.rank(c) == rho.rank(b.union(c)) + rho.rank(b.intersection(c))
        })
    });

    RSetReport {
        members,
        least,
        greatest,
        bounds_ok,
        sublattice_ok,
        modular_ok,
    }
}

/// Both sides of the equality
/// `rho(A) = rho(B) + sum_{i in A-B} rho(i)` and its two-condition
/// reformulation; they agree on every polymatroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecastCheck {
    /// Whether the displayed equality holds.
    pub equality: bool,
    /// Condition (1): `rho(A) = rho(A - i) + rho(i)` for all `i` in `A - B`.
    pub removable_ok: bool,
    /// Condition (2): `rho(A ∩ B) = rho(B)`.
    pub closure_ok: bool,
}

pub fn recast_r_test(rho: &Polymatroid, a: Subset, b: Subset) -> RecastCheck {
    let equality = rho.rank(a)
        == rho.rank(b)
            + a.minus(b)
                .elements()
                .map(|i| rho.singleton_rank(i))
                .sum::<Rank>();
    let removable_ok = a
        .minus(b)
        .elements()
        .all(|i| rho.rank(a) == rho.rank(a.remove(i)) + rho.singleton_rank(i));
    let closure_ok = rho.rank(a.intersection(b)) == rho.rank(b);
    assert_eq!(equality, removable_ok && closure_ok, "recast equivalence");
    RecastCheck {
        equality,
        removable_ok,
        closure_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtin;

    #[test]
    fn fig2_flats() {
        let rho = builtin("fig2poly").unwrap();
        assert!(is_flat(&rho, Subset::from_elements([2, 3])));
        assert!(!is_flat(&rho, Subset::singleton(3)));
        assert!(is_flat(&rho, Subset::full(3)));
        let all = flats(&rho);
        // intersection of flats is a flat
        for &a in &all {
            for &b in &all {
                assert!(is_flat(&rho, a.intersection(b)));
            }
        }
    }

    #[test]
    fn fig1_closure_and_exchange_failure() {
        let rho = builtin("fig1poly").unwrap();
        assert_eq!(
            closure(&rho, Subset::singleton(3)),
            Subset::from_elements([1, 2, 3, 4])
        );
        assert_eq!(closure(&rho, Subset::full(7)), Subset::full(7));
        assert_eq!(closure(&rho, Subset::EMPTY), rho.loops());
        // MacLane-Steinitz exchange fails here:
        assert!(closure(&rho, Subset::singleton(3)).contains(2));
        assert!(!closure(&rho, Subset::EMPTY).contains(2));
        assert!(!closure(&rho, Subset::singleton(2)).contains(3));
        // {e3} is not a flat
        assert!(!is_flat(&rho, Subset::singleton(3)));
    }

    #[test]
    fn vamos_cyclic_sets() {
        let rho = builtin("vamos2poly").unwrap();
        let expected: Vec<Subset> = rho
            .subsets()
            .filter(|&s| s.len() != 1 && s != Subset::from_elements([1, 4]))
            .collect();
        assert_eq!(cyclic_sets(&rho), expected);
        assert_eq!(cy(&rho, Subset::EMPTY), Subset::EMPTY);
        assert_eq!(cy(&rho, Subset::from_elements([1, 4])), Subset::EMPTY);
        let ab = Subset::from_elements([1, 2]);
        assert_eq!(cy(&rho, ab), ab);
    }

    #[test]
    fn cy_identity_on_ranks() {
        let rho = builtin("fig2poly").unwrap();
        for a in rho.subsets() {
            let c = cy(&rho, a);
            let extra: Rank = a.minus(c).elements().map(|i| rho.singleton_rank(i)).sum();
            assert_eq!(rho.rank(a), rho.rank(c) + extra);
        }
    }

    #[test]
    fn fig2_cyclic_flat_lattice() {
        let rho = builtin("fig2poly").unwrap();
        let z = cyclic_flat_lattice(&rho);
        assert_eq!(
            z.members(),
            &[
                Subset::EMPTY,
                Subset::from_elements([2, 3]),
                Subset::full(3)
            ]
        );
        assert_eq!(z.ranks(), &[Rank::ZERO, Rank::int(2), Rank::int(3)]);
    }

    #[test]
    fn free_polymatroid_lattice_is_trivial() {
        let free = Polymatroid::from_fn(3, |s| Rank::int(2 * s.len() as i64)).unwrap();
        let z = cyclic_flat_lattice(&free);
        assert_eq!(z.members(), &[Subset::EMPTY]);
    }

    #[test]
    fn fano_lattice_and_axioms() {
        let fano = builtin("fano").unwrap();
        let z = cyclic_flat_lattice(&fano);
        assert_eq!(z.members().len(), 9); // empty, 7 lines, everything
        let family = ranked_family(&fano);
        assert!(check_z_axioms(&family, ZMode::Matroid).unwrap().ok());
        assert!(check_z_axioms(&family, ZMode::Polymatroid).unwrap().ok());

        // raise one line's rank to 3: (Z2) must fail
        let mut flats = family.flats().to_vec();
        let line = flats.iter().position(|(z, _)| z.len() == 3).unwrap();
        flats[line].1 = Rank::int(3);
        let broken = RankedFamily::new(7, flats, family.singletons().map(|s| s.to_vec()));
        let report = check_z_axioms(&broken, ZMode::Matroid).unwrap();
        assert!(report.failed("Z2"));
    }

    #[test]
    fn fig2_polymatroid_axioms_and_reconstruction() {
        let rho = builtin("fig2poly").unwrap();
        let family = ranked_family(&rho);
        assert!(check_z_axioms(&family, ZMode::Polymatroid).unwrap().ok());
        assert_eq!(polymatroid_from_cyclic_flats(&family).unwrap(), rho);
        // worked min-formula entry: rho({1}) = min(0+2, 2+2, 3+0)
        let rebuilt = polymatroid_from_cyclic_flats(&family).unwrap();
        assert_eq!(rebuilt.singleton_rank(1), Rank::int(2));
    }

    #[test]
    fn free_family_reconstructs_u22() {
        let family = RankedFamily::new(
            2,
            vec![(Subset::EMPTY, Rank::ZERO)],
            Some(vec![Rank::int(1), Rank::int(1)]),
        );
        let rho = polymatroid_from_cyclic_flats(&family).unwrap();
        assert_eq!(rho, builtin("uniform(2,2)").unwrap());
    }

    #[test]
    fn fano_reconstruction_matches_matroid_formula() {
        let fano = builtin("fano").unwrap();
        let family = ranked_family(&fano);
        let rebuilt = polymatroid_from_cyclic_flats(&family).unwrap();
        assert_eq!(rebuilt, fano);
        // independent oracle: r(Y) = min over Z of r(Z) + |Y - Z|
        for y in fano.subsets() {
            let by_formula = family
                .flats()
                .iter()
                .map(|&(z, r)| r + Rank::int(y.minus(z).len() as i64))
                .min()
                .unwrap();
            assert_eq!(fano.rank(y), by_formula);
        }
    }

    #[test]
    fn missing_singletons_is_a_domain_error() {
        let family = RankedFamily::new(2, vec![(Subset::EMPTY, Rank::ZERO)], None);
        assert_eq!(
            check_z_axioms(&family, ZMode::Polymatroid).unwrap_err(),
            Error::RankDomainMismatch
        );
    }

    #[test]
    fn r_set_of_a_cyclic_flat_is_itself() {
        let rho = builtin("fig2poly").unwrap();
        let a = Subset::from_elements([2, 3]);
        let report = r_set(&rho, a);
        assert_eq!(report.members, vec![a]);
        assert!(report.bounds_ok && report.sublattice_ok && report.modular_ok);
        // and for A = {1}, the empty flat wins: 0+2 beats 2+2 and 3+0
        let report = r_set(&rho, Subset::singleton(1));
        assert_eq!(report.members, vec![Subset::EMPTY]);
    }

    #[test]
    fn fano_basis_r_set_is_a_sublattice_but_not_an_interval() {
        let fano = builtin("fano").unwrap();
        let basis = Subset::from_elements([1, 2, 4]);
        assert_eq!(fano.rank(basis), Rank::int(3));
        let report = r_set(&fano, basis);
        assert!(report.bounds_ok && report.sublattice_ok && report.modular_ok);
        assert_eq!(report.members.len(), 5); // empty, three lines, E
        assert_eq!(report.least, Subset::EMPTY);
        assert_eq!(report.greatest, Subset::full(7));
        let lines: Vec<Subset> = report.members[1..4].to_vec();
        assert!(lines
            .iter()
            .all(|l| l.len() == 3 && l.intersection(basis).len() == 2));
        // not an interval: other lines sit between the bounds but are absent
        let z = cyclic_flat_lattice(&fano);
        let skipped = z
            .members()
            .iter()
            .filter(|&&m| {
                report.least.is_subset_of(m)
                    && m.is_subset_of(report.greatest)
                    && !report.members.contains(&m)
            })
            .count();
        assert_eq!(skipped, 4);
    }

    #[test]
    fn modularity_can_fail_across_the_r_set_boundary() {
        // A = {a,b} is a cyclic flat of the Vamos-like polymatroid, so
        // R(A) = {A}; pairing it with the cyclic flat {c,d} outside
        // R(A) breaks the modular equality.
        let rho = builtin("vamos2poly").unwrap();
        let a = Subset::from_elements([1, 2]);
        let report = r_set(&rho, a);
        assert_eq!(report.members, vec![a]);
        let outside = Subset::from_elements([3, 4]);
        assert!(is_cyclic_flat(&rho, outside));
        let lhs = rho.rank(a) + rho.rank(outside);
        let rhs = rho.rank(a.union(outside)) + rho.rank(a.intersection(outside));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn recast_examples() {
        let rho = builtin("fig2poly").unwrap();
        for a in rho.subsets() {
            let check = recast_r_test(&rho, a, cy(&rho, a));
            assert!(check.equality);
            let check = recast_r_test(&rho, a, a);
            assert!(check.equality);
        }
        // Fano: basis against a line meeting it in one point
        let fano = builtin("fano").unwrap();
        let basis = Subset::from_elements([1, 2, 4]);
        let line = Subset::from_elements([1, 6, 7]);
        let check = recast_r_test(&fano, basis, line);
        assert!(!check.equality);
        assert!(check.removable_ok);
        assert!(!check.closure_ok);
    }

    #[test]
    fn dual_cyclic_flats_are_not_complements() {
        let rho = builtin("fig2poly").unwrap();
        let dual = rho.k_dual(2).unwrap();
        let z_dual = cyclic_flat_lattice(&dual);
        assert_eq!(
            z_dual.members(),
            &[
                Subset::EMPTY,
                Subset::from_elements([1, 3]),
                Subset::full(3)
            ]
        );
        // the complement of the cyclic flat {2,3} of rho is {1}, which
        // is not a cyclic flat of the 2-dual
        let complements: Vec<Subset> = cyclic_flat_lattice(&rho)
            .members()
            .iter()
            .map(|&z| z.complement(3))
            .collect();
        assert!(complements.contains(&Subset::singleton(1)));
        assert!(!z_dual.contains(Subset::singleton(1)));
        // and {1,3} is a dual cyclic flat whose complement {2} is not one of rho
        assert!(!cyclic_flat_lattice(&rho).contains(Subset::singleton(2)));
    }

    #[test]
    fn scaled_rational_fixtures_round_trip() {
        let rho = builtin("fig2poly").unwrap();
        for factor in [Rank::new(1, 2), Rank::new(3, 2)] {
            let scaled = rho.scale(factor).unwrap();
            assert_eq!(flats(&scaled), flats(&rho));
            assert_eq!(cyclic_sets(&scaled), cyclic_sets(&rho));
            let family = ranked_family(&scaled);
            assert!(check_z_axioms(&family, ZMode::Polymatroid).unwrap().ok());
            assert_eq!(polymatroid_from_cyclic_flats(&family).unwrap(), scaled);
        }
    }
}

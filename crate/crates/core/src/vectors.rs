//! Independent vectors, bases, and circuits of an integer polymatroid,
//! with checkers for each axiom system.
//!
//! A vector `u` in `N^n` is independent when `|u|_X <= rho(X)` for
//! every subset `X`; bases are the maximal independent vectors and
//! circuits the minimal dependent vectors inside the bounding box
//! `U = [rho(1)]_0 x .. x [rho(n)]_0`. Certificates always report the
//! lexicographically least witness.

use crate::subset::Subset;
use crate::{enumeration_cap, par, Error, Polymatroid, Rank, Result};
use std::collections::HashSet;
use std::fmt;

/// An `n`-tuple of nonnegative integers.
///
/// The derived order (`Ord`) is lexicographic and is used for sorting
/// and certificates; the dominance order of the vector lattice is
/// exposed through [`IntVector::le`] and friends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<u32>);

impl IntVector {
    pub fn new(entries: Vec<u32>) -> IntVector {
        IntVector(entries)
    }

    pub fn zero(n: usize) -> IntVector {
        IntVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry for element `i` (1-based).
    pub fn entry(&self, element: usize) -> u32 {
        self.0[element - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// The norm `|u|`.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|&v| v as i64).sum()
    }

    /// `|u|_X`: the sum of the entries indexed by `x`.
    pub fn norm_on(&self, x: Subset) -> i64 {
        x.elements().map(|i| self.entry(i) as i64).sum()
    }

    /// Componentwise `<=` (the lattice order, not the lexicographic one).
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `<`: `le` and different.
    pub fn lt(&self, other: &IntVector) -> bool {
        self.le(other) && self != other
    }

    pub fn join(&self, other: &IntVector) -> IntVector {
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn meet(&self, other: &IntVector) -> IntVector {
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `u + e_i`.
    pub fn bump(&self, element: usize) -> IntVector {
        let mut v = self.0.clone();
        v[element - 1] += 1;
        IntVector(v)
    }

    /// `u - e_i`; entry must be positive.
    pub fn drop(&self, element: usize) -> IntVector {
        let mut v = self.0.clone();
        v[element - 1] -= 1;
        IntVector(v)
    }

    /// Elements with a positive entry.
    pub fn support(&self) -> Subset {
        Subset::from_elements((1..=self.len()).filter(|&i| self.entry(i) > 0))
    }

    /// Entrywise complement in `(k,..,k)`.
    pub fn complement(&self, k: u32) -> IntVector {
        IntVector(self.0.iter().map(|&v| k - v).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The box `U = [m_1]_0 x .. x [m_n]_0`, with a bijection between
/// vectors and indices that respects lexicographic order (the first
/// coordinate is the most significant digit).
#[derive(Debug, Clone)]
pub(crate) struct VectorBox {
    bounds: Vec<u32>,
    size: usize,
}

impl VectorBox {
    pub(crate) fn new(bounds: &[u32]) -> Result<VectorBox> {
        let cap = enumeration_cap();
        let mut size: u64 = 1;
        for &m in bounds {
            size = size.saturating_mul(m as u64 + 1);
            if size > cap {
                return Err(Error::CapacityExceeded { needed: size, cap });
            }
        }
        Ok(VectorBox {
            bounds: bounds.to_vec(),
            size: size as usize,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.size
    }

    pub(crate) fn contains(&self, v: &IntVector) -> bool {
        v.as_slice().iter().zip(&self.bounds).all(|(&a, &m)| a <= m)
    }

    pub(crate) fn index(&self, v: &IntVector) -> usize {
        let mut idx = 0usize;
        for (&e, &m) in v.as_slice().iter().zip(&self.bounds) {
            idx = idx * (m as usize + 1) + e as usize;
        }
        idx
    }

    pub(crate) fn at(&self, mut idx: usize) -> IntVector {
        let mut out = vec![0u32; self.bounds.len()];
        for (slot, &m) in out.iter_mut().zip(&self.bounds).rev() {
            let radix = m as usize + 1;
            *slot = (idx % radix) as u32;
            idx /= radix;
        }
        IntVector(out)
    }
}

/// A finite set of vectors of one length, kept sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFamily {
    n: usize,
    vectors: Vec<IntVector>,
}

impl VectorFamily {
    pub fn new(n: usize, mut vectors: Vec<IntVector>) -> VectorFamily {
        assert!(
            vectors.iter().all(|v| v.len() == n),
            "vector length mismatch"
        );
        vectors.sort();
        vectors.dedup();
        VectorFamily { n, vectors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[IntVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.vectors.binary_search(v).is_ok()
    }
}

/// Circuits plus the per-element bounds `m_i` (the pair `(U, C)`).
///
/// The bounds carry the singleton ranks, which the circuits alone miss
/// whenever an element lies in no circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitSystem {
    bounds: Vec<u32>,
    circuits: Vec<IntVector>,
}

impl CircuitSystem {
    pub fn new(bounds: Vec<u32>, mut circuits: Vec<IntVector>) -> CircuitSystem {
        assert!(
            circuits.iter().all(|c| c.len() == bounds.len()),
            "vector length mismatch"
        );
        circuits.sort();
        circuits.dedup();
        CircuitSystem { bounds, circuits }
    }

    pub fn n(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn circuits(&self) -> &[IntVector] {
        &self.circuits
    }
}

/// One axiom line of a checker report: passed, failed with the least
/// witness, or skipped because a prerequisite axiom failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass,
    Fail(String),
    Skipped,
}

/// Result of an axiom checker: one outcome per axiom, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    items: Vec<(&'static str, AxiomOutcome)>,
}

impl AxiomReport {
    pub(crate) fn new(items: Vec<(&'static str, AxiomOutcome)>) -> AxiomReport {
        AxiomReport { items }
    }

    pub fn ok(&self) -> bool {
        self.items
            .iter()
            .all(|(_, o)| matches!(o, AxiomOutcome::Pass))
    }

    pub fn failed(&self, axiom: &str) -> bool {
        self.items
            .iter()
            .any(|(name, o)| *name == axiom && matches!(o, AxiomOutcome::Fail(_)))
    }

    /// Names of the failed axioms, in report order.
    pub fn failed_axioms(&self) -> Vec<&'static str> {
        self.items
            .iter()
            .filter(|(_, o)| matches!(o, AxiomOutcome::Fail(_)))
            .map(|(name, _)| *name)
            .collect()
    }

    pub fn items(&self) -> &[(&'static str, AxiomOutcome)] {
        &self.items
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (name, outcome)) in self.items.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            match outcome {
                AxiomOutcome::Pass => write!(f, "{name}: ok")?,
                AxiomOutcome::Fail(detail) => write!(f, "{name}: FAIL: {detail}")?,
                AxiomOutcome::Skipped => write!(f, "{name}: skipped")?,
            }
        }
        Ok(())
    }
}

fn integer_bounds(rho: &Polymatroid) -> Result<Vec<u32>> {
    rho.require_integral()?;
    Ok((1..=rho.n())
        .map(|i| rho.singleton_rank(i).as_int().unwrap() as u32)
        .collect())
}

// One shared independence scan: entry v of the result says whether the
// v-th box vector is independent. Only flats need checking, since
// |u|_X <= |u|_{cl X} and rho(cl X) = rho(X).
fn independence_table(rho: &Polymatroid, bx: &VectorBox) -> Vec<bool> {
    let ints = rho.int_table().expect("bounds come from an integral table");
    let n = rho.n();
    let flats: Vec<(Subset, i64)> = rho
        .subsets()
        .filter(|&a| {
            let ra = ints[a.index()];
            (1..=n).all(|i| a.contains(i) || ints[a.insert(i).index()] > ra)
        })
        .map(|a| (a, ints[a.index()]))
        .collect();
    par::map_indexed(bx.len(), |idx| {
        let v = bx.at(idx);
        flats.iter().all(|&(x, r)| v.norm_on(x) <= r)
    })
}

/// All independent vectors of an integer polymatroid, in lex order.
pub fn independent_vectors(rho: &Polymatroid) -> Result<VectorFamily> {
    let bounds = integer_bounds(rho)?;
    let bx = VectorBox::new(&bounds)?;
    let indep = independence_table(rho, &bx);
    let vectors = (0..bx.len())
        .filter(|&i| indep[i])
        .map(|i| bx.at(i))
        .collect();
    Ok(VectorFamily::new(rho.n(), vectors))
}

/// The bases: maximal independent vectors. All have norm `rho(E)`.
pub fn bases(rho: &Polymatroid) -> Result<VectorFamily> {
    let bounds = integer_bounds(rho)?;
    let bx = VectorBox::new(&bounds)?;
    let indep = independence_table(rho, &bx);
    let vectors = (0..bx.len())
        .filter(|&i| indep[i])
        .map(|i| bx.at(i))
        .filter(|v| {
            (1..=rho.n()).all(|i| v.entry(i) >= bounds[i - 1] || !indep[bx.index(&v.bump(i))])
        })
        .collect();
    Ok(VectorFamily::new(rho.n(), vectors))
}

/// Recovers ranks from any family of independent vectors containing
/// the bases: `rho(X) = max |u|_X`.
pub fn rank_from_vectors(family: &VectorFamily, x: Subset) -> Result<Rank> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(Rank::int(
        family.vectors().iter().map(|u| u.norm_on(x)).max().unwrap(),
    ))
}

/// Rebuilds the whole polymatroid from a basis (or independent) family.
pub fn polymatroid_from_vectors(family: &VectorFamily) -> Result<Polymatroid> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let ranks = par::map_indexed(1 << family.n(), |mask| {
        let x = Subset(mask as u32);
        Rank::int(family.vectors().iter().map(|u| u.norm_on(x)).max().unwrap())
    });
    Polymatroid::from_ranks(family.n(), ranks)
}

/// Checks the independent-vector axioms (I1) downward closure and
/// (I2) augmentation.
pub fn check_independence_axioms(family: &VectorFamily) -> Result<AxiomReport> {
    if family.is_empty() {
        return Err(Error::NotNonempty);
    }
    let set: HashSet<&IntVector> = family.vectors().iter().collect();

    let mut i1 = AxiomOutcome::Pass;
    'i1: for v in family.vectors() {
        for i in 1..=family.n() {
            if v.entry(i) > 0 && !set.contains(&v.drop(i)) {
                i1 = AxiomOutcome::Fail(format!("v={v} but {} is missing", v.drop(i)));
                break 'i1;
            }
        }
    }

    let mut i2 = AxiomOutcome::Pass;
    'i2: for u in family.vectors() {
        for v in family.vectors() {
            if u.norm() >= v.norm() {
                continue;
            }
            // unit step first; exact under (I1), and the general scan
            // keeps the check literal when (I1) fails
            let unit_hit =
                (1..=family.n()).any(|i| u.entry(i) < v.entry(i) && set.contains(&u.bump(i)));
            if unit_hit {
                continue;
            }
            let bound = u.join(v);
            if !family.vectors().iter().any(|w| u.lt(w) && w.le(&bound)) {
                i2 = AxiomOutcome::Fail(format!("u={u} v={v}: no w with u < w <= u∨v"));
                break 'i2;
            }
        }
    }

    Ok(AxiomReport::new(vec![("I1", i1), ("I2", i2)]))
}

/// Which basis exchange property to check.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum BasisAxiom {
    /// (B): one-sided exchange.
    Exchange,
    /// (B'): symmetric exchange; implies (B).
    SymmetricExchange,
    /// Antichain plus the middle-basis (betweenness) property.
    Middle,
}

/// Checks the selected basis axiom on a nonempty family.
pub fn check_basis_axioms(family: &VectorFamily, which: BasisAxiom) -> Result<AxiomReport> {
    if family.is_empty() {
        return Err(Error::NotNonempty);
    }
    match which {
        BasisAxiom::Exchange => Ok(AxiomReport::new(vec![(
            "B",
            exchange_outcome(family, false),
        )])),
        BasisAxiom::SymmetricExchange => Ok(AxiomReport::new(vec![(
            "B'",
            exchange_outcome(family, true),
        )])),
        BasisAxiom::Middle => Ok(check_middle(family)),
    }
}

fn exchange_outcome(family: &VectorFamily, symmetric: bool) -> AxiomOutcome {
    let n = family.n();
    for u in family.vectors() {
        for v in family.vectors() {
            for i in 1..=n {
                if u.entry(i) <= v.entry(i) {
                    continue;
                }
                let ok = (1..=n).any(|j| {
                    u.entry(j) < v.entry(j)
                        && family.contains(&u.drop(i).bump(j))
                        && (!symmetric || family.contains(&v.drop(j).bump(i)))
                });
                if !ok {
                    return AxiomOutcome::Fail(format!("u={u} v={v} i={i}"));
                }
            }
        }
    }
    AxiomOutcome::Pass
}

// The betweenness condition quantifies over all x <= y in N^n, but
// only x below some basis and y above some basis matter, and y can be
// clipped into the componentwise maximum m of the family. So both
// scans stay inside the box [0, m].
fn check_middle(family: &VectorFamily) -> AxiomReport {
    let n = family.n();

    let mut antichain = AxiomOutcome::Pass;
    'ac: for u in family.vectors() {
        for v in family.vectors() {
            if u != v && u.le(v) {
                antichain = AxiomOutcome::Fail(format!("u={u} v={v}: comparable"));
                break 'ac;
            }
        }
    }

    let bounds: Vec<u32> = (1..=n)
        .map(|i| family.vectors().iter().map(|v| v.entry(i)).max().unwrap())
        .collect();
    let bx = match VectorBox::new(&bounds) {
        Ok(bx) => bx,
        Err(_) => {
            return AxiomReport::new(vec![
                ("M1", antichain),
                (
                    "M2",
                    AxiomOutcome::Fail("family box exceeds the enumeration cap".into()),
                ),
            ]);
        }
    };
    let down = cone(&bx, family, true);
    let up = cone(&bx, family, false);

    let mut middle = AxiomOutcome::Pass;
    'mid: for (yi, reachable_top) in up.iter().enumerate() {
        if !reachable_top {
            continue;
        }
        let y = bx.at(yi);
        // down-closure of the bases lying under y
        let mut reach = vec![false; bx.len()];
        for w in family.vectors() {
            if w.le(&y) {
                reach[bx.index(w)] = true;
            }
        }
        for idx in (0..bx.len()).rev() {
            if !reach[idx] {
                continue;
            }
            let v = bx.at(idx);
            for i in 1..=n {
                if v.entry(i) > 0 {
                    reach[bx.index(&v.drop(i))] = true;
                }
            }
        }
        for xi in 0..bx.len() {
            if down[xi] && !reach[xi] && bx.at(xi).le(&y) {
                middle = AxiomOutcome::Fail(format!(
                    "x={} y={y}: no w in the family with x <= w <= y",
                    bx.at(xi)
                ));
                break 'mid;
            }
        }
    }

    AxiomReport::new(vec![("M1", antichain), ("M2", middle)])
}

// marks every box vector below (down) or above (up) a family member
fn cone(bx: &VectorBox, family: &VectorFamily, down: bool) -> Vec<bool> {
    let n = family.n();
    let mut marked = vec![false; bx.len()];
    for v in family.vectors() {
        if bx.contains(v) {
            marked[bx.index(v)] = true;
        }
    }
    if down {
        for idx in (0..bx.len()).rev() {
            if !marked[idx] {
                continue;
            }
            let v = bx.at(idx);
            for i in 1..=n {
                if v.entry(i) > 0 {
                    marked[bx.index(&v.drop(i))] = true;
                }
            }
        }
    } else {
        for idx in 0..bx.len() {
            if !marked[idx] {
                continue;
            }
            let v = bx.at(idx);
            for i in 1..=n {
                if !bx.contains(&v.bump(i)) {
                    continue;
                }
                marked[bx.index(&v.bump(i))] = true;
            }
        }
    }
    marked
}

/// Complements every basis in `(k,..,k)`: the bases of the `k`-dual.
pub fn dual_bases(family: &VectorFamily, k: u32) -> Result<VectorFamily> {
    for v in family.vectors() {
        for i in 1..=family.n() {
            if v.entry(i) > k {
                return Err(Error::KTooSmall { element: i });
            }
        }
    }
    Ok(VectorFamily::new(
        family.n(),
        family.vectors().iter().map(|v| v.complement(k)).collect(),
    ))
}

/// The circuits of an integer polymatroid: minimal dependent vectors
/// in the box `U`, with bounds `m_i = rho(i)`.
pub fn circuits(rho: &Polymatroid) -> Result<CircuitSystem> {
    let bounds = integer_bounds(rho)?;
    let bx = VectorBox::new(&bounds)?;
    let indep = independence_table(rho, &bx);
    let list = (0..bx.len())
        .filter(|&i| !indep[i])
        .map(|i| bx.at(i))
        .filter(|v| (1..=rho.n()).all(|i| v.entry(i) == 0 || indep[bx.index(&v.drop(i))]))
        .collect();
    Ok(CircuitSystem::new(bounds, list))
}

/// Checks circuit axioms (C1)-(C4).
///
/// The bounds precondition — `m_i` equals the largest `i`-th entry
/// whenever some circuit has one — is an error, not a verdict.
pub fn check_circuit_axioms(system: &CircuitSystem) -> Result<AxiomReport> {
    let n = system.n();
    let c = system.circuits();
    for i in 1..=n {
        let max = c.iter().map(|u| u.entry(i)).max().unwrap_or(0);
        if max > 0 && max != system.bounds()[i - 1] {
            return Err(Error::BoundsMismatch { element: i });
        }
        if c.iter().any(|u| u.entry(i) > system.bounds()[i - 1]) {
            return Err(Error::BoundsMismatch { element: i });
        }
    }

    let mut c1 = AxiomOutcome::Pass;
    for u in c {
        if u.support().len() < 2 {
            c1 = AxiomOutcome::Fail(format!("u={u} has fewer than two positive entries"));
            break;
        }
    }

    let mut c2 = AxiomOutcome::Pass;
    'c2: for u in c {
        for v in c {
            if u != v && u.lt(v) {
                c2 = AxiomOutcome::Fail(format!("u={u} v={v}: comparable"));
                break 'c2;
            }
        }
    }

    let c3 = check_c3(system);
    let c4 = check_c4(system);
    Ok(AxiomReport::new(vec![
        ("C1", c1),
        ("C2", c2),
        ("C3", c3),
        ("C4", c4),
    ]))
}

fn check_c3(system: &CircuitSystem) -> AxiomOutcome {
    let c = system.circuits();
    let n = system.n();
    let hit = par::first_hit(c.len() * c.len(), |pair| {
        let (ui, vi) = (pair / c.len(), pair % c.len());
        if ui >= vi {
            return None;
        }
        let (u, v) = (&c[ui], &c[vi]);
        let bound = u.join(v);
        for i in 1..=n {
            if u.entry(i) == 0 || v.entry(i) == 0 {
                continue;
            }
            let top = u.entry(i).max(v.entry(i));
            let ok = c.iter().any(|z| z.lt(&bound) && z.entry(i) < top);
            if !ok {
                return Some(format!("u={u} v={v} i={i}"));
            }
        }
        None
    });
    match hit {
        Some(detail) => AxiomOutcome::Fail(detail),
        None => AxiomOutcome::Pass,
    }
}

fn check_c4(system: &CircuitSystem) -> AxiomOutcome {
    let c = system.circuits();
    let n = system.n();
    for u in c {
        for i in 1..=n {
            if u.entry(i) == 0 || u.entry(i) >= system.bounds()[i - 1] {
                continue;
            }
            for j in 1..=n {
                if j == i || u.entry(j) == 0 {
                    continue;
                }
                let ok = c.iter().any(|v| {
                    v.entry(i) == u.entry(i) + 1
                        && v.entry(j) < u.entry(j)
                        && (1..=n).all(|h| h == i || v.entry(h) <= u.entry(h))
                });
                if !ok {
                    return AxiomOutcome::Fail(format!("u={u} i={i} j={j}"));
                }
            }
        }
    }
    AxiomOutcome::Pass
}

/// Rebuilds the polymatroid determined by a circuit system: the
/// independent vectors are the box vectors with no circuit below them.
/// Requires the axioms to hold.
pub fn polymatroid_from_circuits(system: &CircuitSystem) -> Result<Polymatroid> {
    let report = check_circuit_axioms(system)?;
    if !report.ok() {
        return Err(Error::AxiomsFailed(report.to_string()));
    }
    let bx = VectorBox::new(system.bounds())?;
    // upward closure of the circuit markers = dependent vectors
    let mut dependent = vec![false; bx.len()];
    for c in system.circuits() {
        dependent[bx.index(c)] = true;
    }
    for idx in 0..bx.len() {
        if !dependent[idx] {
            continue;
        }
        let v = bx.at(idx);
        for i in 1..=system.n() {
            let up = v.bump(i);
            if bx.contains(&up) {
                dependent[bx.index(&up)] = true;
            }
        }
    }
    let independents: Vec<IntVector> = (0..bx.len())
        .filter(|&i| !dependent[i])
        .map(|i| bx.at(i))
        .collect();
    polymatroid_from_vectors(&VectorFamily::new(system.n(), independents))
}

/// Report of the rank/cyclicity diagnosis of one element inside a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDiagnosis {
    /// False for loops, where the circuit criterion does not apply.
    pub applicable: bool,
    /// Whether `rho(A) < rho(A - i) + rho(i)`.
    pub strict: bool,
    /// Least circuit with a positive `i`-th entry supported inside `A`.
    pub witness: Option<IntVector>,
    /// For `A = E`: `max { c_i }`, the element rank the circuits see.
    pub rank_from_circuits: Option<i64>,
}

/// Diagnoses whether element `i` is "cyclic inside `A`", checking the
/// rank inequality and the circuit witness against each other.
pub fn element_diagnosis(rho: &Polymatroid, element: usize, a: Subset) -> Result<ElementDiagnosis> {
    if !rho.ground().contains(element) {
        return Err(Error::UnknownElement(element));
    }
    if !a.contains(element) {
        return Err(Error::ElementNotInSet { element });
    }
    rho.require_integral()?;
    if rho.singleton_rank(element).is_zero() {
        return Ok(ElementDiagnosis {
            applicable: false,
            strict: false,
            witness: None,
            rank_from_circuits: None,
        });
    }
    let strict = rho.rank(a) < rho.rank(a.remove(element)) + rho.singleton_rank(element);
    let system = circuits(rho)?;
    let witness = system
        .circuits()
        .iter()
        .find(|c| c.entry(element) > 0 && c.support().is_subset_of(a))
        .cloned();
    assert_eq!(
        strict,
        witness.is_some(),
        "rank inequality and circuit witness must agree"
    );
    let rank_from_circuits = if a == rho.ground().full() {
        let max = system
            .circuits()
            .iter()
            .map(|c| c.entry(element) as i64)
            .max()
            .filter(|&m| m > 0);
        if strict {
            assert_eq!(max, rho.singleton_rank(element).as_int());
        } else {
            assert_eq!(max, None);
        }
        max
    } else {
        None
    };
    Ok(ElementDiagnosis {
        applicable: true,
        strict,
        witness,
        rank_from_circuits,
    })
}

/// Circuits of the contraction `rho / i`, derived from the circuit
/// list alone (plus `rho` for the contracted bounds): delete entry
/// `i`, keep the vectors inside the contracted box, take the minimal
/// ones with at least two positive entries.
pub fn contraction_circuits(
    system: &CircuitSystem,
    rho: &Polymatroid,
    element: usize,
) -> Result<CircuitSystem> {
    if !rho.ground().contains(element) {
        return Err(Error::UnknownElement(element));
    }
    rho.require_integral()?;
    let ri = rho.singleton_rank(element);
    let bounds: Vec<u32> = (1..=rho.n())
        .filter(|&j| j != element)
        .map(|j| {
            let pair = Subset::singleton(element).insert(j);
            (rho.rank(pair) - ri).as_int().unwrap() as u32
        })
        .collect();
    let dropped: Vec<IntVector> = system
        .circuits()
        .iter()
        .map(|c| {
            IntVector::new(
                (1..=system.n())
                    .filter(|&j| j != element)
                    .map(|j| c.entry(j))
                    .collect(),
            )
        })
        .filter(|c| c.as_slice().iter().zip(&bounds).all(|(&e, &m)| e <= m))
        .collect();
    let minimal: Vec<IntVector> = dropped
        .iter()
        .filter(|c| !dropped.iter().any(|d| d.lt(c)))
        .filter(|c| c.support().len() >= 2)
        .cloned()
        .collect();
    Ok(CircuitSystem::new(bounds, minimal))
}

/// Connectivity through circuits: every pair of elements shares a
/// circuit with positive entries at both.
pub fn connected_via_circuits(rho: &Polymatroid) -> Result<bool> {
    if rho.n() == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let system = circuits(rho)?;
    for i in 1..=rho.n() {
        for j in i + 1..=rho.n() {
            if !system
                .circuits()
                .iter()
                .any(|c| c.entry(i) > 0 && c.entry(j) > 0)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

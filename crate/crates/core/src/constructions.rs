//! Builders for the polymatroid families the library works with:
//! induced polymatroids from matroids, Boolean and lattice-path
//! polymatroids, a few named fixtures, and a seeded random generator.

use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset};
use crate::vectors::{CircuitSystem, IntVector};
use crate::{Error, Polymatroid, Rank, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// GF(2) rank of a set of column vectors (bitmask coordinates).
fn gf2_rank(columns: &[u32]) -> i64 {
    let mut pivot = [0u32; 32];
    let mut rank = 0i64;
    for &c in columns {
        let mut v = c;
        while v != 0 {
            let h = 31 - v.leading_zeros() as usize;
            if pivot[h] == 0 {
                pivot[h] = v;
                rank += 1;
                break;
            }
            v ^= pivot[h];
        }
    }
    rank
}

/// The linear matroid of GF(2) column vectors, as an explicit table.
pub fn gf2_matroid(columns: &[u32]) -> Result<Matroid> {
    let n = columns.len();
    GroundSet::new(n)?;
    let poly = Polymatroid::from_fn(n, |s| {
        let picked: Vec<u32> = s.elements().map(|i| columns[i - 1]).collect();
        Rank::int(gf2_rank(&picked))
    })?;
    Matroid::new(poly)
}

/// Applies a matroid through a multivalued map:
/// `rho(A) = r_M(union of phi(e) for e in A)`.
pub fn induced_polymatroid(m: &Matroid, phi: &[Subset]) -> Result<Polymatroid> {
    let ground = Subset::full(m.n());
    if phi.iter().any(|p| !p.is_subset_of(ground)) {
        return Err(Error::UnknownMatroidElement);
    }
    GroundSet::new(phi.len())?;
    Polymatroid::from_fn(phi.len(), |a| {
        let image = a
            .elements()
            .fold(Subset::EMPTY, |acc, e| acc.union(phi[e - 1]));
        m.poly().rank(image)
    })
}

/// A bipartite graph between polymatroid elements `1..=n` and hubs
/// `1..=k`, stored as one neighbor mask per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    k: usize,
    adjacency: Vec<u32>,
}

impl BipartiteGraph {
    pub fn new(n: usize, k: usize, edges: &[(usize, usize)]) -> Result<BipartiteGraph> {
        GroundSet::new(n)?;
        if k > 32 {
            return Err(Error::CapacityExceeded {
                needed: k as u64,
                cap: 32,
            });
        }
        let mut adjacency = vec![0u32; n];
        for &(e, h) in edges {
            if e == 0 || e > n {
                return Err(Error::UnknownElement(e));
            }
            if h == 0 || h > k {
                return Err(Error::UnknownElement(h));
            }
            adjacency[e - 1] |= 1 << (h - 1);
        }
        Ok(BipartiteGraph { n, k, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hubs(&self) -> usize {
        self.k
    }

    /// Neighbor hubs of a set of elements, as a mask.
    pub fn neighbors(&self, a: Subset) -> u32 {
        a.elements().fold(0, |acc, e| acc | self.adjacency[e - 1])
    }

    /// Edges in (element, hub) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for e in 1..=self.n {
            for h in 1..=self.k {
                if self.adjacency[e - 1] >> (h - 1) & 1 == 1 {
                    out.push((e, h));
                }
            }
        }
        out
    }
}

/// The Boolean polymatroid of a bipartite graph: `rho(A) = |N(A)|`.
pub fn boolean_polymatroid(graph: &BipartiteGraph) -> Result<Polymatroid> {
    Polymatroid::from_fn(graph.n(), |a| {
        Rank::int(graph.neighbors(a).count_ones() as i64)
    })
}

/// The canonical decomposition of a Boolean polymatroid into rank-one
/// matroids, one per hub.
pub fn boolean_rank1_parts(graph: &BipartiteGraph) -> Result<Vec<Matroid>> {
    (1..=graph.hubs())
        .map(|h| {
            let poly = Polymatroid::from_fn(graph.n(), |a| {
                Rank::int((graph.neighbors(a) >> (h - 1) & 1) as i64)
            })?;
            Matroid::new(poly)
        })
        .collect()
}

/// A lattice path diagram: nested rows of consecutive columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePathDiagram {
    rows: Vec<(usize, usize)>,
}

impl LatticePathDiagram {
    pub fn new(rows: Vec<(usize, usize)>) -> Result<LatticePathDiagram> {
        for (h, &(a, b)) in rows.iter().enumerate() {
            if a == 0 || a > b {
                return Err(Error::MalformedDiagram(format!(
                    "row {} has an empty or inverted interval [{a},{b}]",
                    h + 1
                )));
            }
            if h > 0 && (a < rows[h - 1].0 || b < rows[h - 1].1) {
                return Err(Error::MalformedDiagram(format!(
                    "row {} is not shifted weakly right of row {h}",
                    h + 1
                )));
            }
        }
        Ok(LatticePathDiagram { rows })
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    /// Number of monotone lattice paths: weakly increasing choices
    /// `c_h` with `a_h <= c_h <= b_h`, counted by a prefix DP.
    pub fn path_count(&self) -> u64 {
        let top = self.rows.iter().map(|&(_, b)| b).max().unwrap_or(0);
        let mut ways = vec![1u64; top + 1]; // ways[c] = paths with c_h <= c
        for &(a, b) in &self.rows {
            let mut next = vec![0u64; top + 1];
            next[a..=b].copy_from_slice(&ways[a..=b]);
            for c in 1..=top {
                next[c] += next[c - 1];
            }
            ways = next;
        }
        ways[top]
    }
}

/// The Boolean polymatroid of the interval system of a diagram.
pub fn lattice_path_polymatroid(diagram: &LatticePathDiagram, n: usize) -> Result<Polymatroid> {
    if let Some(&(_, b)) = diagram.rows().iter().find(|&&(_, b)| b > n) {
        return Err(Error::MalformedDiagram(format!(
            "row reaches column {b} beyond n={n}"
        )));
    }
    let edges: Vec<(usize, usize)> = diagram
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(h, &(a, b))| (a..=b).map(move |e| (e, h + 1)))
        .collect();
    boolean_polymatroid(&BipartiteGraph::new(n, diagram.rows().len(), &edges)?)
}

/// The uniform matroid rank function `min(|A|, r)`.
pub fn uniform(r: usize, n: usize) -> Result<Polymatroid> {
    Polymatroid::from_fn(n, |a| Rank::int((a.len().min(r)) as i64))
}

/// The Fano plane: GF(2) rank over the seven nonzero vectors, point
/// `p` carrying coordinate mask `p`.
pub fn fano() -> Polymatroid {
    let columns: Vec<u32> = (1..=7).collect();
    gf2_matroid(&columns).unwrap().poly().clone()
}

/// The rank-2 polymatroid of the seven lines of PG(2,2), induced from
/// the Fano point matroid by mapping each line to its three points.
pub fn pg22_lines() -> Polymatroid {
    let columns: Vec<u32> = (1..=7).collect();
    let points = gf2_matroid(&columns).unwrap();
    let mut lines: Vec<Subset> = Vec::new();
    for a in 1u32..=7 {
        for b in a + 1..=7 {
            let c = a ^ b;
            if c > b {
                lines.push(Subset::from_elements([a as usize, b as usize, c as usize]));
            }
        }
    }
    lines.sort();
    assert_eq!(lines.len(), 7);
    induced_polymatroid(&points, &lines).unwrap()
}

/// The four-element rank-4 counterpart of the Vamos matroid: four
/// lines, every pair coplanar except the first and last.
pub fn vamos2poly() -> Polymatroid {
    let ad = Subset::from_elements([1, 4]);
    Polymatroid::from_fn(4, |s| {
        Rank::int(match s.len() {
            0 => 0,
            1 => 2,
            2 => {
                if s == ad {
                    4
                } else {
                    3
                }
            }
            _ => 4,
        })
    })
    .unwrap()
}

/// The three-element rank-3 polymatroid of a point on a line plus a
/// separate line, rebuilt from its published circuit system.
pub fn fig2poly() -> Polymatroid {
    let circuits = vec![
        IntVector::new(vec![2, 0, 2]),
        IntVector::new(vec![2, 1, 1]),
        IntVector::new(vec![0, 1, 2]),
    ];
    crate::vectors::polymatroid_from_circuits(&CircuitSystem::new(vec![2, 1, 2], circuits)).unwrap()
}

/// The bipartite graph behind the running Boolean-polymatroid example:
/// seven elements over three hubs.
pub fn fig1_graph() -> BipartiteGraph {
    BipartiteGraph::new(
        7,
        3,
        &[
            (1, 1),
            (2, 1),
            (3, 1),
            (3, 2),
            (4, 1),
            (4, 2),
            (5, 2),
            (5, 3),
            (6, 2),
            (6, 3),
            (7, 3),
        ],
    )
    .unwrap()
}

/// The lattice path diagram matching [`fig1_graph`]: rows [1,4],
/// [3,6], [5,7] over seven columns.
pub fn fig3_diagram() -> LatticePathDiagram {
    LatticePathDiagram::new(vec![(1, 4), (3, 6), (5, 7)]).unwrap()
}

/// Named fixtures: `uniform(r,n)`, `fano`, `pg22_lines`, `vamos2poly`,
/// `fig2poly`, and `fig1poly`.
pub fn builtin(name: &str) -> Result<Polymatroid> {
    let name = name.trim();
    if let Some(args) = name
        .strip_prefix("uniform(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() == 2 {
            if let (Ok(r), Ok(n)) = (parts[0].parse(), parts[1].parse()) {
                return uniform(r, n);
            }
        }
        return Err(Error::UnknownName(name.into()));
    }
    match name {
        "fano" => Ok(fano()),
        "pg22_lines" => Ok(pg22_lines()),
        "vamos2poly" => Ok(vamos2poly()),
        "fig2poly" => Ok(fig2poly()),
        "fig1poly" => boolean_polymatroid(&fig1_graph()),
        _ => Err(Error::UnknownName(name.into())),
    }
}

/// Every matroid on a tiny ground set, by exhaustive enumeration of
/// monotone tables bounded by cardinality.
pub fn all_matroids(n: usize) -> Vec<Matroid> {
    assert!(n <= 4, "exhaustive enumeration is for tiny ground sets");
    let size = 1usize << n;
    let mut tables = vec![vec![0i64; size]];
    for mask in 1..size {
        let card = (mask as u32).count_ones() as i64;
        let mut grown = Vec::new();
        for t in &tables {
            for v in 0..=card {
                let mut t2 = t.clone();
                t2[mask] = v;
                grown.push(t2);
            }
        }
        tables = grown;
    }
    tables
        .into_iter()
        .filter_map(|t| {
            let ranks = t.into_iter().map(Rank::int).collect();
            Polymatroid::from_ranks(n, ranks)
                .ok()
                .and_then(|p| Matroid::new(p).ok())
        })
        .collect()
}

/// Seeded random integer polymatroid: a random GF(2) matroid of rank
/// at most 5 on at most 10 elements, pushed through a random
/// multivalued map with images of size at most `max_phi`. Every
/// integer polymatroid arises this way, so the generator has full
/// support in principle.
pub fn random_instance(seed: u64, max_n: usize, max_phi: usize) -> Polymatroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank_bound: u32 = rng.gen_range(1..=5);
    let cols: usize = rng.gen_range(1..=10);
    let columns: Vec<u32> = (0..cols)
        .map(|_| rng.gen_range(0..1u32 << rank_bound))
        .collect();
    let m = gf2_matroid(&columns).expect("at most 10 columns");
    let n = rng.gen_range(1..=max_n);
    let phi: Vec<Subset> = (0..n)
        .map(|_| {
            let size = rng.gen_range(0..=max_phi.min(cols));
            let mut image = Subset::EMPTY;
            while image.len() < size {
                image = image.insert(rng.gen_range(1..=cols));
            }
            image
        })
        .collect();
    induced_polymatroid(&m, &phi).expect("induced polymatroids are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_boolean_values() {
        let rho = boolean_polymatroid(&fig1_graph()).unwrap();
        assert_eq!(rho.singleton_rank(1), Rank::int(1));
        assert_eq!(rho.singleton_rank(3), Rank::int(2));
        assert_eq!(rho.rank(Subset::from_elements([3, 5])), Rank::int(3));
        assert_eq!(rho.total_rank(), Rank::int(3));
    }

    #[test]
    fn degenerate_boolean_graphs() {
        let edgeless = BipartiteGraph::new(3, 2, &[]).unwrap();
        let rho = boolean_polymatroid(&edgeless).unwrap();
        assert_eq!(rho.total_rank(), Rank::ZERO);

        let complete =
            BipartiteGraph::new(3, 2, &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]).unwrap();
        let rho = boolean_polymatroid(&complete).unwrap();
        for a in rho.subsets() {
            let expect = if a.is_empty() { 0 } else { 2 };
            assert_eq!(rho.rank(a), Rank::int(expect));
        }
    }

    #[test]
    fn diagram_validation_and_path_counts() {
        assert!(matches!(
            LatticePathDiagram::new(vec![(2, 1)]),
            Err(Error::MalformedDiagram(_))
        ));
        assert!(matches!(
            LatticePathDiagram::new(vec![(2, 3), (1, 4)]),
            Err(Error::MalformedDiagram(_))
        ));

        let single = LatticePathDiagram::new(vec![(1, 4)]).unwrap();
        assert_eq!(single.path_count(), 4);
        let rho = lattice_path_polymatroid(&single, 4).unwrap();
        let bases = crate::vectors::bases(&rho).unwrap();
        // one north step anywhere: the four unit vectors
        assert_eq!(bases.len(), 4);
        assert!(bases.vectors().iter().all(|v| v.norm() == 1));

        assert_eq!(fig3_diagram().path_count(), 41);
    }

    #[test]
    fn fig3_polymatroid_is_fig1s() {
        let by_graph = boolean_polymatroid(&fig1_graph()).unwrap();
        let by_diagram = lattice_path_polymatroid(&fig3_diagram(), 7).unwrap();
        assert_eq!(by_graph, by_diagram);
    }

    #[test]
    fn pg22_lines_shape() {
        let rho = pg22_lines();
        assert_eq!(rho.n(), 7);
        for i in 1..=7 {
            assert_eq!(rho.singleton_rank(i), Rank::int(2));
        }
        assert_eq!(rho.total_rank(), Rank::int(3));
    }

    #[test]
    fn fano_has_seven_rank2_lines() {
        let fano = fano();
        let lines = fano
            .subsets()
            .filter(|&s| s.len() == 3 && fano.rank(s) == Rank::int(2))
            .count();
        assert_eq!(lines, 7);
        assert_eq!(fano.total_rank(), Rank::int(3));
    }

    #[test]
    fn induced_degenerate_maps() {
        let m = gf2_matroid(&[1, 2, 3]).unwrap();
        let identity: Vec<Subset> = (1..=3).map(Subset::singleton).collect();
        assert_eq!(
            induced_polymatroid(&m, &identity).unwrap(),
            m.poly().clone()
        );

        let blank = vec![Subset::EMPTY; 2];
        let rho = induced_polymatroid(&m, &blank).unwrap();
        assert_eq!(rho.total_rank(), Rank::ZERO);

        assert_eq!(
            induced_polymatroid(&m, &[Subset::from_elements([4])]).unwrap_err(),
            Error::UnknownMatroidElement
        );
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("uniform(3,14)").unwrap().total_rank(), Rank::int(3));
        assert!(builtin("fano").is_ok());
        assert_eq!(
            builtin("nonsense").unwrap_err(),
            Error::UnknownName("nonsense".into())
        );
        assert!(matches!(
            builtin("uniform(x,2)"),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn all_matroids_on_two_elements() {
        // zero, point+loop both ways, a double point, two free points
        let ms = all_matroids(2);
        assert_eq!(ms.len(), 5);
    }

    #[test]
    fn generator_produces_valid_bounded_instances() {
        for seed in 0..30 {
            let rho = random_instance(seed, 5, 3);
            assert!(rho.n() >= 1 && rho.n() <= 5);
            assert!(rho.max_singleton_rank() <= Rank::int(3));
            assert_eq!(random_instance(seed, 5, 3), rho, "deterministic by seed");
        }
    }
}

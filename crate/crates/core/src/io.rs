//! Canonical text formats.
//!
//! Five self-describing UTF-8 formats with LF line endings, one header
//! line each: `POLY v1` rank tables (`poly n=..`), `VEC v1` vector
//! families (`vectors n=.. kind=..`), `ZED v1` ranked cyclic flats
//! (`zflats n=..`), `GRAPH v1` bipartite graphs (`graph n=.. k=..`)
//! and `DIAG v1` lattice path diagrams (`diag n=.. k=..`). Writers
//! emit one canonical form — sorted, no trailing whitespace — so
//! parse/write round trips are byte-identical.

use crate::constructions::{BipartiteGraph, LatticePathDiagram};
use crate::matroid::{BlockMap, Matroid};
use crate::subset::Subset;
use crate::vectors::{CircuitSystem, IntVector, VectorFamily};
use crate::zflats::RankedFamily;
use crate::{Error, Polymatroid, Rank, Result};
use std::fmt::Write as _;

/// What a file claims to hold, read off its header keyword.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum FileKind {
    Poly,
    Vectors,
    ZFlats,
    Graph,
    Diagram,
}

impl FileKind {
    pub fn detect(text: &str) -> Option<FileKind> {
        let head = text.lines().next()?.split_whitespace().next()?;
        match head {
            "poly" => Some(FileKind::Poly),
            "vectors" => Some(FileKind::Vectors),
            "zflats" => Some(FileKind::ZFlats),
            "graph" => Some(FileKind::Graph),
            "diag" => Some(FileKind::Diagram),
            _ => None,
        }
    }

    pub fn from_extension(path: &str) -> Option<FileKind> {
        match path.rsplit('.').next()? {
            "poly" => Some(FileKind::Poly),
            "vec" => Some(FileKind::Vectors),
            "zed" => Some(FileKind::ZFlats),
            "graph" => Some(FileKind::Graph),
            "diag" => Some(FileKind::Diagram),
            _ => None,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

// `key=value` fields on a header line after the keyword
fn header_fields<'a>(
    line: &'a str,
    keyword: &str,
    keys: &[&str],
) -> std::result::Result<Vec<&'a str>, String> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(format!("expected a `{keyword}` header"));
    }
    let fields: Vec<&str> = parts.collect();
    if fields.len() != keys.len() {
        return Err(format!("expected fields {keys:?}"));
    }
    keys.iter()
        .zip(fields)
        .map(|(key, field)| {
            field
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| format!("expected `{key}=...`, found `{field}`"))
        })
        .collect()
}

fn parse_usize(text: &str, line: usize, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{text}`")))
}

/// A parsed `POLY v1` file, not yet validated as a polymatroid.
#[derive(Debug, Clone)]
pub struct PolyFile {
    pub n: usize,
    pub ranks: Vec<Rank>,
    pub blocks: Option<BlockMap>,
}

impl PolyFile {
    pub fn into_polymatroid(self) -> Result<Polymatroid> {
        Polymatroid::from_ranks(self.n, self.ranks)
    }

    pub fn into_matroid(self) -> Result<Matroid> {
        let blocks = self.blocks.clone();
        let poly = self.into_polymatroid()?;
        match blocks {
            Some(b) => Matroid::with_blocks(poly, b),
            None => Matroid::new(poly),
        }
    }
}

/// Parses `POLY v1`. Rejects duplicate and missing subsets.
pub fn parse_poly(text: &str) -> Result<PolyFile> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(header, "poly", &["n"]).map_err(|m| parse_err(1, m))?;
    let n = parse_usize(fields[0], 1, "ground set size")?;
    if n > crate::MAX_GROUND {
        return Err(Error::CapacityExceeded {
            needed: n as u64,
            cap: crate::MAX_GROUND as u64,
        });
    }
    let size = 1usize << n;
    let mut ranks: Vec<Option<Rank>> = vec![None; size];
    let mut block_rows: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("block ") {
            let (source, members) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `block i: (i,1) ...`"))?;
            let source = parse_usize(source.trim(), lineno, "block index")?;
            let mut names = Vec::new();
            for token in members.split_whitespace() {
                let inner = token
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| parse_err(lineno, format!("bad element name `{token}`")))?;
                let (i, t) = inner
                    .split_once(',')
                    .ok_or_else(|| parse_err(lineno, format!("bad element name `{token}`")))?;
                names.push((
                    parse_usize(i, lineno, "block source")?,
                    parse_usize(t, lineno, "clone index")?,
                ));
            }
            block_rows.push((source, names));
            continue;
        }
        let (subset_text, rank_text) = line
            .rsplit_once(':')
            .ok_or_else(|| parse_err(lineno, "expected `{subset}: rank`"))?;
        let subset = Subset::parse(subset_text.trim()).map_err(|m| parse_err(lineno, m))?;
        if !subset.is_subset_of(Subset::full(n)) {
            return Err(parse_err(lineno, format!("subset {subset} exceeds n={n}")));
        }
        let rank = Rank::parse(rank_text.trim()).map_err(|m| parse_err(lineno, m))?;
        if ranks[subset.index()].is_some() {
            return Err(parse_err(lineno, format!("duplicate subset {subset}")));
        }
        ranks[subset.index()] = Some(rank);
    }
    let mut table = Vec::with_capacity(size);
    for (mask, rank) in ranks.into_iter().enumerate() {
        match rank {
            Some(r) => table.push(r),
            None => {
                return Err(parse_err(
                    0,
                    format!("missing subset {}", Subset(mask as u32)),
                ))
            }
        }
    }
    let blocks = if block_rows.is_empty() {
        None
    } else {
        let mut sizes = vec![0usize; block_rows.len()];
        for (source, names) in &block_rows {
            if *source == 0 || *source > block_rows.len() {
                return Err(parse_err(0, format!("block {source} out of order")));
            }
            for (k, &(i, t)) in names.iter().enumerate() {
                if i != *source || t != k + 1 {
                    return Err(parse_err(
                        0,
                        format!("block {source} must list ({source},1) ({source},2) ..."),
                    ));
                }
            }
            sizes[source - 1] = names.len();
        }
        let blocks = BlockMap::new(sizes);
        if blocks.total() != n {
            return Err(parse_err(0, "blocks do not partition the ground set"));
        }
        Some(blocks)
    };
    Ok(PolyFile {
        n,
        ranks: table,
        blocks,
    })
}

/// Writes `POLY v1` in canonical order.
pub fn write_poly(rho: &Polymatroid) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "poly n={}", rho.n());
    for s in rho.subsets() {
        let _ = writeln!(out, "{s}: {}", rho.rank(s));
    }
    out
}

/// Writes a matroid with its supplementary `blocks` section.
pub fn write_matroid(m: &Matroid) -> String {
    let mut out = write_poly(m.poly());
    if let Some(blocks) = m.blocks() {
        for i in 1..=blocks.sources() {
            let mut line = format!("block {i}:");
            for t in 1..=blocks.size(i) {
                let _ = write!(line, " ({i},{t})");
            }
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

/// What a `VEC v1` file holds.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum VecKind {
    Bases,
    Independents,
    Circuits,
}

impl VecKind {
    fn name(self) -> &'static str {
        match self {
            VecKind::Bases => "bases",
            VecKind::Independents => "independents",
            VecKind::Circuits => "circuits",
        }
    }
}

/// A parsed `VEC v1` file.
#[derive(Debug, Clone)]
pub struct VecFile {
    pub n: usize,
    pub kind: VecKind,
    pub bounds: Option<Vec<u32>>,
    pub vectors: Vec<IntVector>,
}

impl VecFile {
    pub fn family(&self) -> VectorFamily {
        VectorFamily::new(self.n, self.vectors.clone())
    }

    pub fn circuit_system(&self) -> Result<CircuitSystem> {
        match (&self.kind, &self.bounds) {
            (VecKind::Circuits, Some(bounds)) => {
                Ok(CircuitSystem::new(bounds.clone(), self.vectors.clone()))
            }
            _ => Err(parse_err(0, "not a circuits file with bounds")),
        }
    }
}

fn parse_entries(text: &str, n: usize, lineno: usize) -> Result<IntVector> {
    let entries: Vec<u32> = text
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(lineno, format!("bad entry `{t}`")))
        })
        .collect::<Result<_>>()?;
    if entries.len() != n {
        return Err(parse_err(lineno, format!("expected {n} entries")));
    }
    Ok(IntVector::new(entries))
}

/// Parses `VEC v1`.
pub fn parse_vec(text: &str) -> Result<VecFile> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(header, "vectors", &["n", "kind"]).map_err(|m| parse_err(1, m))?;
    let n = parse_usize(fields[0], 1, "vector length")?;
    let kind = match fields[1] {
        "bases" => VecKind::Bases,
        "independents" => VecKind::Independents,
        "circuits" => VecKind::Circuits,
        other => return Err(parse_err(1, format!("unknown kind `{other}`"))),
    };
    let mut bounds = None;
    let mut vectors = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("bounds:") {
            if kind != VecKind::Circuits {
                return Err(parse_err(lineno, "bounds line is only for circuits"));
            }
            if bounds.is_some() {
                return Err(parse_err(lineno, "duplicate bounds line"));
            }
            bounds = Some(parse_entries(rest, n, lineno)?.as_slice().to_vec());
        } else if let Some(rest) = line.strip_prefix("circuit:") {
            if kind != VecKind::Circuits {
                return Err(parse_err(lineno, "circuit line in a non-circuits file"));
            }
            vectors.push(parse_entries(rest, n, lineno)?);
        } else {
            if kind == VecKind::Circuits {
                return Err(parse_err(lineno, "expected `circuit: ...` lines"));
            }
            vectors.push(parse_entries(line, n, lineno)?);
        }
    }
    if kind == VecKind::Circuits && bounds.is_none() {
        return Err(parse_err(0, "circuits need a bounds line"));
    }
    Ok(VecFile {
        n,
        kind,
        bounds,
        vectors,
    })
}

fn write_vector_lines(out: &mut String, prefix: &str, vectors: &[IntVector]) {
    for v in vectors {
        let mut line = String::from(prefix);
        for (k, e) in v.as_slice().iter().enumerate() {
            if k > 0 || !prefix.is_empty() {
                line.push(' ');
            }
            let _ = write!(line, "{e}");
        }
        out.push_str(&line);
        out.push('\n');
    }
}

/// Writes a basis or independent family as `VEC v1`.
pub fn write_family(family: &VectorFamily, kind: VecKind) -> String {
    assert_ne!(kind, VecKind::Circuits, "circuits carry bounds");
    let mut out = String::new();
    let _ = writeln!(out, "vectors n={} kind={}", family.n(), kind.name());
    write_vector_lines(&mut out, "", family.vectors());
    out
}

/// Writes a circuit system as `VEC v1` with its bounds line.
pub fn write_circuits(system: &CircuitSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vectors n={} kind=circuits", system.n());
    let mut line = String::from("bounds:");
    for m in system.bounds() {
        let _ = write!(line, " {m}");
    }
    out.push_str(&line);
    out.push('\n');
    write_vector_lines(&mut out, "circuit:", system.circuits());
    out
}

/// Parses `ZED v1`. Singleton ranks may be omitted entirely (matroid
/// mode) but not partially.
pub fn parse_zed(text: &str) -> Result<RankedFamily> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(header, "zflats", &["n"]).map_err(|m| parse_err(1, m))?;
    let n = parse_usize(fields[0], 1, "ground set size")?;
    let mut flats: Vec<(Subset, Rank)> = Vec::new();
    let mut singles: Vec<Option<Rank>> = vec![None; n];
    let mut any_single = false;
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("flat ") {
            let (subset_text, rank_text) = rest
                .rsplit_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `flat {subset}: rank`"))?;
            let z = Subset::parse(subset_text.trim()).map_err(|m| parse_err(lineno, m))?;
            if !z.is_subset_of(Subset::full(n)) {
                return Err(parse_err(lineno, format!("flat {z} exceeds n={n}")));
            }
            if flats.iter().any(|&(w, _)| w == z) {
                return Err(parse_err(lineno, format!("duplicate flat {z}")));
            }
            let r = Rank::parse(rank_text.trim()).map_err(|m| parse_err(lineno, m))?;
            flats.push((z, r));
        } else if let Some(rest) = line.strip_prefix("singleton ") {
            let (elem_text, rank_text) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `singleton i: rank`"))?;
            let i = parse_usize(elem_text.trim(), lineno, "element")?;
            if i == 0 || i > n {
                return Err(parse_err(lineno, format!("element {i} exceeds n={n}")));
            }
            if singles[i - 1].is_some() {
                return Err(parse_err(lineno, format!("duplicate singleton {i}")));
            }
            singles[i - 1] = Some(Rank::parse(rank_text.trim()).map_err(|m| parse_err(lineno, m))?);
            any_single = true;
        } else {
            return Err(parse_err(lineno, "expected a `flat` or `singleton` line"));
        }
    }
    let singletons = if any_single {
        let mut out = Vec::with_capacity(n);
        for (k, s) in singles.into_iter().enumerate() {
            out.push(s.ok_or_else(|| parse_err(0, format!("missing singleton {}", k + 1)))?);
        }
        Some(out)
    } else {
        None
    };
    Ok(RankedFamily::new(n, flats, singletons))
}

/// Writes `ZED v1` in canonical order.
pub fn write_zed(family: &RankedFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "zflats n={}", family.n());
    for &(z, r) in family.flats() {
        let _ = writeln!(out, "flat {z}: {r}");
    }
    if let Some(singles) = family.singletons() {
        for (k, r) in singles.iter().enumerate() {
            let _ = writeln!(out, "singleton {}: {r}", k + 1);
        }
    }
    out
}

/// Parses `GRAPH v1`.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(header, "graph", &["n", "k"]).map_err(|m| parse_err(1, m))?;
    let n = parse_usize(fields[0], 1, "element count")?;
    let k = parse_usize(fields[1], 1, "hub count")?;
    let mut edges = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("edge ")
            .ok_or_else(|| parse_err(lineno, "expected `edge e h` lines"))?;
        let parts: Vec<&str> = rest.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(lineno, "expected `edge e h`"));
        }
        let e = parse_usize(parts[0], lineno, "element")?;
        let h = parse_usize(parts[1], lineno, "hub")?;
        if edges.contains(&(e, h)) {
            return Err(parse_err(lineno, format!("duplicate edge {e} {h}")));
        }
        edges.push((e, h));
    }
    BipartiteGraph::new(n, k, &edges)
}

/// Writes `GRAPH v1` with edges sorted by (element, hub).
pub fn write_graph(graph: &BipartiteGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph n={} k={}", graph.n(), graph.hubs());
    for (e, h) in graph.edges() {
        let _ = writeln!(out, "edge {e} {h}");
    }
    out
}

/// Parses `DIAG v1`; returns the diagram and its column count.
pub fn parse_diag(text: &str) -> Result<(LatticePathDiagram, usize)> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields = header_fields(header, "diag", &["n", "k"]).map_err(|m| parse_err(1, m))?;
    let n = parse_usize(fields[0], 1, "column count")?;
    let k = parse_usize(fields[1], 1, "row count")?;
    let mut rows = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix("row ")
            .ok_or_else(|| parse_err(lineno, "expected `row a b` lines"))?;
        let parts: Vec<&str> = rest.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(lineno, "expected `row a b`"));
        }
        rows.push((
            parse_usize(parts[0], lineno, "row start")?,
            parse_usize(parts[1], lineno, "row end")?,
        ));
    }
    if rows.len() != k {
        return Err(parse_err(
            0,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    Ok((LatticePathDiagram::new(rows)?, n))
}

/// Writes `DIAG v1`.
pub fn write_diag(diagram: &LatticePathDiagram, n: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "diag n={} k={}", n, diagram.rows().len());
    for &(a, b) in diagram.rows() {
        let _ = writeln!(out, "row {a} {b}");
    }
    out
}

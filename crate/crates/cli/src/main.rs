//! Batch front end: parse any representation, convert, verify, report.
//!
//! Exit codes: 0 = success / axioms hold, 1 = axioms checked and
//! false (certificate on standard output), 2 = input or parse error
//! (message on standard error).

use clap::{Parser, Subcommand};
use polymatroid::io::{self, FileKind, PolyFile, VecFile, VecKind};
use polymatroid::vectors::{self, AxiomReport, BasisAxiom};
use polymatroid::zflats::{self, RankedFamily, ZMode};
use polymatroid::{constructions, natural, Error, Polymatroid, Subset};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polymat", version, about = "Integer polymatroid toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check the axioms its representation promises.
    Validate {
        input: PathBuf,
        /// Override format detection: poly|vec|zed|graph|diag.
        #[arg(long)]
        format: Option<String>,
    },
    /// Print rank, connectivity, loop set, and family counts.
    Info {
        input: PathBuf,
        #[arg(long)]
        format: Option<String>,
    },
    /// Convert between rank, bases, circuits, and zflats files.
    Convert {
        input: PathBuf,
        /// Target representation: rank|bases|circuits|zflats.
        #[arg(long)]
        to: String,
        /// Expected source representation (checked against the file).
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        format: Option<String>,
    },
    /// Build the natural matroid, with its blocks section.
    Natural {
        input: PathBuf,
        #[arg(long)]
        format: Option<String>,
    },
    /// Run one axiom checker: poly|I|B|Bprime|middle|C|Z|PZ.
    Check {
        input: PathBuf,
        #[arg(long)]
        axioms: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Print the minimizing cyclic flats of a set, with structure report.
    Rset {
        input: PathBuf,
        /// The set A, e.g. `{1,3}` or `1,3`.
        #[arg(long)]
        set: String,
        #[arg(long)]
        format: Option<String>,
    },
    /// Emit a built-in polymatroid, or build one from a graph/diagram file.
    Make {
        /// A builtin name like `uniform(3,14)`, `fano`, `pg22_lines`,
        /// `vamos2poly`, `fig2poly`, or `boolean` / `lattice-path`
        /// with an input file.
        name: String,
        input: Option<PathBuf>,
    },
}

/// Anything that should end the process with exit code 2.
#[derive(Debug)]
struct Fatal(String);

impl<E: std::error::Error> From<E> for Fatal {
    fn from(e: E) -> Fatal {
        Fatal(e.to_string())
    }
}

/// `Ok(true)` = exit 0, `Ok(false)` = certificate printed, exit 1.
type Verdict = Result<bool, Fatal>;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Verdict {
    match cli.command {
        Command::Validate { input, format } => validate(&input, format.as_deref()),
        Command::Info { input, format } => info(&input, format.as_deref()),
        Command::Convert {
            input,
            to,
            from,
            format,
        } => convert(&input, &to, from.as_deref(), format.as_deref()),
        Command::Natural { input, format } => natural_cmd(&input, format.as_deref()),
        Command::Check {
            input,
            axioms,
            format,
        } => check(&input, &axioms, format.as_deref()),
        Command::Rset { input, set, format } => rset(&input, &set, format.as_deref()),
        Command::Make { name, input } => make(&name, input.as_deref()),
    }
}

enum Loaded {
    Poly(PolyFile),
    Vectors(VecFile),
    ZFlats(RankedFamily),
    Graph(constructions::BipartiteGraph),
    Diagram(constructions::LatticePathDiagram, usize),
}

fn load(path: &Path, format: Option<&str>) -> Result<Loaded, Fatal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fatal(format!("cannot read {}: {e}", path.display())))?;
    let kind = match format {
        Some("poly") => FileKind::Poly,
        Some("vec") => FileKind::Vectors,
        Some("zed") => FileKind::ZFlats,
        Some("graph") => FileKind::Graph,
        Some("diag") => FileKind::Diagram,
        Some(other) => return Err(Fatal(format!("unknown format `{other}`"))),
        None => FileKind::detect(&text)
            .or_else(|| FileKind::from_extension(&path.to_string_lossy()))
            .ok_or_else(|| Fatal(format!("cannot detect the format of {}", path.display())))?,
    };
    Ok(match kind {
        FileKind::Poly => Loaded::Poly(io::parse_poly(&text)?),
        FileKind::Vectors => Loaded::Vectors(io::parse_vec(&text)?),
        FileKind::ZFlats => Loaded::ZFlats(io::parse_zed(&text)?),
        FileKind::Graph => Loaded::Graph(io::parse_graph(&text)?),
        FileKind::Diagram => {
            let (d, n) = io::parse_diag(&text)?;
            Loaded::Diagram(d, n)
        }
    })
}

fn is_table_axiom_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NegativeRank(_)
            | Error::NotNormalized
            | Error::NotMonotone { .. }
            | Error::NotSubmodular { .. }
    )
}

// prints `poly: ...` and converts table-axiom violations into exit 1
fn table_to_poly(file: PolyFile, quiet_ok: bool) -> Result<Option<Polymatroid>, Fatal> {
    match file.into_polymatroid() {
        Ok(rho) => {
            if !quiet_ok {
                println!("poly: ok");
            }
            Ok(Some(rho))
        }
        Err(e) if is_table_axiom_error(&e) => {
            println!("poly: FAIL: {e}");
            println!("result: FAIL");
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn print_report(report: &AxiomReport) -> bool {
    println!("{report}");
    println!("result: {}", if report.ok() { "ok" } else { "FAIL" });
    report.ok()
}

fn validate(path: &Path, format: Option<&str>) -> Verdict {
    match load(path, format)? {
        Loaded::Poly(file) => match table_to_poly(file, false)? {
            Some(_) => {
                println!("result: ok");
                Ok(true)
            }
            None => Ok(false),
        },
        Loaded::Vectors(file) => {
            let report = match file.kind {
                VecKind::Bases => {
                    vectors::check_basis_axioms(&file.family(), BasisAxiom::SymmetricExchange)?
                }
                VecKind::Independents => vectors::check_independence_axioms(&file.family())?,
                VecKind::Circuits => vectors::check_circuit_axioms(&file.circuit_system()?)?,
            };
            Ok(print_report(&report))
        }
        Loaded::ZFlats(family) => {
            let mode = if family.singletons().is_some() {
                ZMode::Polymatroid
            } else {
                ZMode::Matroid
            };
            let report = zflats::check_z_axioms(&family, mode)?;
            Ok(print_report(&report))
        }
        Loaded::Graph(g) => {
            constructions::boolean_polymatroid(&g)?;
            println!("graph: ok");
            println!("result: ok");
            Ok(true)
        }
        Loaded::Diagram(d, n) => {
            constructions::lattice_path_polymatroid(&d, n)?;
            println!("diag: ok");
            println!("result: ok");
            Ok(true)
        }
    }
}

fn info(path: &Path, format: Option<&str>) -> Verdict {
    let Loaded::Poly(file) = load(path, format)? else {
        return Err(Fatal("info expects a rank table (POLY v1)".into()));
    };
    let Some(rho) = table_to_poly(file, true)? else {
        return Ok(false);
    };
    println!("n: {}", rho.n());
    println!("rank: {}", rho.total_rank());
    match rho.is_connected() {
        Ok(true) => println!("connected: yes"),
        Ok(false) => println!("connected: no"),
        Err(_) => println!("connected: n/a"),
    }
    println!("loops: {}", rho.loops());
    println!(
        "cyclic flats: {}",
        zflats::cyclic_flat_lattice(&rho).members().len()
    );
    match vectors::bases(&rho) {
        Ok(b) => println!("bases: {}", b.len()),
        Err(_) => println!("bases: n/a"),
    }
    match vectors::circuits(&rho) {
        Ok(c) => println!("circuits: {}", c.circuits().len()),
        Err(_) => println!("circuits: n/a"),
    }
    Ok(true)
}

fn kind_name(loaded: &Loaded) -> &'static str {
    match loaded {
        Loaded::Poly(_) => "rank",
        Loaded::Vectors(f) => match f.kind {
            VecKind::Bases => "bases",
            VecKind::Independents => "independents",
            VecKind::Circuits => "circuits",
        },
        Loaded::ZFlats(_) => "zflats",
        Loaded::Graph(_) => "graph",
        Loaded::Diagram(..) => "diag",
    }
}

fn convert(path: &Path, to: &str, from: Option<&str>, format: Option<&str>) -> Verdict {
    let loaded = load(path, format)?;
    if let Some(expected) = from {
        let actual = kind_name(&loaded);
        if expected != actual {
            return Err(Fatal(format!(
                "input is `{actual}`, but --from says `{expected}`"
            )));
        }
    }
    let rho = match loaded {
        Loaded::Poly(file) => match table_to_poly(file, true)? {
            Some(rho) => rho,
            None => return Ok(false),
        },
        Loaded::Vectors(file) => match file.kind {
            VecKind::Circuits => {
                match vectors::polymatroid_from_circuits(&file.circuit_system()?) {
                    Ok(rho) => rho,
                    Err(Error::AxiomsFailed(cert)) => {
                        println!("{cert}");
                        println!("result: FAIL");
                        return Ok(false);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            _ => vectors::polymatroid_from_vectors(&file.family())?,
        },
        Loaded::ZFlats(family) => match zflats::polymatroid_from_cyclic_flats(&family) {
            Ok(rho) => rho,
            Err(Error::AxiomsFailed(cert)) => {
                println!("{cert}");
                println!("result: FAIL");
                return Ok(false);
            }
            Err(e) => return Err(e.into()),
        },
        Loaded::Graph(_) | Loaded::Diagram(..) => return Err(Fatal(
            "convert expects rank|bases|circuits|zflats input; use `make` for graphs and diagrams"
                .into(),
        )),
    };
    let out = match to {
        "rank" => io::write_poly(&rho),
        "bases" => io::write_family(&vectors::bases(&rho)?, VecKind::Bases),
        "independents" => {
            io::write_family(&vectors::independent_vectors(&rho)?, VecKind::Independents)
        }
        "circuits" => io::write_circuits(&vectors::circuits(&rho)?),
        "zflats" => io::write_zed(&zflats::ranked_family(&rho)),
        other => return Err(Fatal(format!("unknown target `{other}`"))),
    };
    print!("{out}");
    Ok(true)
}

fn natural_cmd(path: &Path, format: Option<&str>) -> Verdict {
    let Loaded::Poly(file) = load(path, format)? else {
        return Err(Fatal("natural expects a rank table (POLY v1)".into()));
    };
    let Some(rho) = table_to_poly(file, true)? else {
        return Ok(false);
    };
    let m = natural::build_natural_matroid(&rho)?;
    print!("{}", io::write_matroid(&m));
    Ok(true)
}

fn check(path: &Path, axioms: &str, format: Option<&str>) -> Verdict {
    let loaded = load(path, format)?;
    let family_input = |loaded: Loaded| -> Result<vectors::VectorFamily, Fatal> {
        match loaded {
            Loaded::Vectors(f) if f.kind != VecKind::Circuits => Ok(f.family()),
            _ => Err(Fatal(
                "this checker expects a bases/independents VEC file".into(),
            )),
        }
    };
    match axioms {
        "poly" => {
            let Loaded::Poly(file) = loaded else {
                return Err(Fatal("--axioms poly expects a rank table".into()));
            };
            match table_to_poly(file, false)? {
                Some(_) => {
                    println!("result: ok");
                    Ok(true)
                }
                None => Ok(false),
            }
        }
        "I" => Ok(print_report(&vectors::check_independence_axioms(
            &family_input(loaded)?,
        )?)),
        "B" | "Bprime" | "middle" => {
            let which = match axioms {
                "B" => BasisAxiom::Exchange,
                "Bprime" => BasisAxiom::SymmetricExchange,
                _ => BasisAxiom::Middle,
            };
            Ok(print_report(&vectors::check_basis_axioms(
                &family_input(loaded)?,
                which,
            )?))
        }
        "C" => {
            let Loaded::Vectors(file) = loaded else {
                return Err(Fatal("--axioms C expects a circuits VEC file".into()));
            };
            Ok(print_report(&vectors::check_circuit_axioms(
                &file.circuit_system()?,
            )?))
        }
        "Z" | "PZ" => {
            let Loaded::ZFlats(family) = loaded else {
                return Err(Fatal("--axioms Z/PZ expects a ZED file".into()));
            };
            let mode = if axioms == "Z" {
                ZMode::Matroid
            } else {
                ZMode::Polymatroid
            };
            Ok(print_report(&zflats::check_z_axioms(&family, mode)?))
        }
        other => Err(Fatal(format!("unknown axiom system `{other}`"))),
    }
}

fn parse_set(text: &str) -> Result<Subset, Fatal> {
    let braced = if text.starts_with('{') {
        text.to_string()
    } else {
        format!("{{{text}}}")
    };
    Subset::parse(&braced).map_err(Fatal)
}

fn rset(path: &Path, set: &str, format: Option<&str>) -> Verdict {
    let Loaded::Poly(file) = load(path, format)? else {
        return Err(Fatal("rset expects a rank table (POLY v1)".into()));
    };
    let Some(rho) = table_to_poly(file, true)? else {
        return Ok(false);
    };
    let a = parse_set(set)?;
    if !a.is_subset_of(Subset::full(rho.n())) {
        return Err(Fatal(format!("set {a} is not inside the ground set")));
    }
    let report = zflats::r_set(&rho, a);
    println!("A: {a}");
    println!("rank: {}", rho.rank(a));
    println!("members: {}", report.members.len());
    for &b in &report.members {
        println!("  {b}: {}", rho.rank(b));
    }
    println!("least cl(cy(A)): {}", report.least);
    println!("greatest cy(cl(A)): {}", report.greatest);
    let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
    println!("bounds: {}", flag(report.bounds_ok));
    println!("sublattice: {}", flag(report.sublattice_ok));
    println!("modular pairs: {}", flag(report.modular_ok));
    let all = report.bounds_ok && report.sublattice_ok && report.modular_ok;
    if !all {
        println!("result: FAIL");
    }
    Ok(all)
}

fn make(name: &str, input: Option<&Path>) -> Verdict {
    let rho = match name {
        "boolean" => {
            let path = input.ok_or_else(|| Fatal("`make boolean` needs a GRAPH v1 file".into()))?;
            let Loaded::Graph(g) = load(path, Some("graph"))? else {
                unreachable!()
            };
            constructions::boolean_polymatroid(&g)?
        }
        "lattice-path" => {
            let path =
                input.ok_or_else(|| Fatal("`make lattice-path` needs a DIAG v1 file".into()))?;
            let Loaded::Diagram(d, n) = load(path, Some("diag"))? else {
                unreachable!()
            };
            constructions::lattice_path_polymatroid(&d, n)?
        }
        _ => constructions::builtin(name)?,
    };
    print!("{}", io::write_poly(&rho));
    Ok(true)
}

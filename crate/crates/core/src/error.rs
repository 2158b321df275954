use crate::subset::Subset;
use thiserror::Error;

/// Every failure the library can report.
///
/// Axiom checkers do not use these for a negative verdict — a family
/// failing its axioms is a valid answer, returned inside a report.
/// Errors mark inputs that violate a precondition or structural
/// invariant, so that "checked and false" and "could not check" stay
/// distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set too large: {needed} elements exceeds the cap of {cap}")]
    CapacityExceeded { needed: u64, cap: u64 },
    #[error("rank table is not total: no entry for subset {0}")]
    MissingSubset(Subset),
    #[error("duplicate rank table entry for subset {0}")]
    DuplicateSubset(Subset),
    #[error("negative rank on subset {0}")]
    NegativeRank(Subset),
    #[error("not normalized: rank of the empty set is nonzero")]
    NotNormalized,
    #[error("not monotone: rank drops from {a} to {b}")]
    NotMonotone { a: Subset, b: Subset },
    #[error("not submodular on the pair {a}, {b}")]
    NotSubmodular { a: Subset, b: Subset },
    #[error("delete and contract sets overlap")]
    OverlappingSets,
    #[error("k too small: element {element} has rank above k")]
    KTooSmall { element: usize },
    #[error("the ground set is empty")]
    EmptyGroundSet,
    #[error("element {0} is not in the ground set")]
    UnknownElement(usize),
    #[error("element {element} is not in the given set")]
    ElementNotInSet { element: usize },
    #[error("block {element} has size {got}, expected rank {expected}")]
    BlockSizeMismatch {
        element: usize,
        got: usize,
        expected: String,
    },
    #[error("matroids are not on a common ground set")]
    GroundSetMismatch,
    #[error("rank sum differs from the polymatroid on {0}: not a decomposition")]
    NotADecomposition(Subset),
    #[error("the family of vectors is empty")]
    NotNonempty,
    #[error("cannot recover ranks from an empty family")]
    EmptyFamily,
    #[error("bounds mismatch: m_{element} is not the maximum circuit entry there")]
    BoundsMismatch { element: usize },
    #[error("axioms failed:\n{0}")]
    AxiomsFailed(String),
    #[error("unknown builtin name `{0}`")]
    UnknownName(String),
    #[error("malformed lattice path diagram: {0}")]
    MalformedDiagram(String),
    #[error("map refers to an element outside the matroid's ground set")]
    UnknownMatroidElement,
    #[error("missing singleton ranks: polymatroid mode needs a rank for every element")]
    RankDomainMismatch,
    #[error("singleton ranks exceed 1: not a matroid (element {element})")]
    NotAMatroid { element: usize },
    #[error("operation needs an integer-valued polymatroid, found rank {rank} on {subset}")]
    NotIntegral { subset: Subset, rank: String },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

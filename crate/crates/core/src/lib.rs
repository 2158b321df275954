//! Exact integer polymatroids on small ground sets.
//!
//! A polymatroid is a normalized, non-decreasing, submodular function
//! `rho` on the subsets of a ground set `[n]`. This crate stores the
//! full rank table (so `n <= 20`), keeps all arithmetic exact, and
//! offers lossless conversions between four equivalent descriptions:
//!
//! * the rank table itself ([`Polymatroid`]),
//! * the basis vectors ([`vectors::bases`]),
//! * the circuit vectors with element bounds ([`vectors::circuits`]),
//! * the ranked cyclic-flat lattice ([`zflats::cyclic_flat_lattice`]).
//!
//! The bridge between the vector and set worlds is the natural matroid
//! ([`natural::build_natural_matroid`]), in which every element of rank
//! `r` is replaced by a block of `r` freely placed clones.
//!
//! ```
//! use polymatroid::{constructions, vectors, zflats};
//!
//! let rho = constructions::builtin("fig2poly").unwrap();
//! assert_eq!(vectors::bases(&rho).unwrap().vectors().len(), 4);
//! assert_eq!(zflats::cyclic_flat_lattice(&rho).members().len(), 3);
//! ```
//!
//! Subset enumeration is data-parallel via rayon when the `parallel`
//! feature (on by default) is enabled; disabling it yields a fully
//! sequential build with identical results.

pub mod constructions;
mod error;
pub mod io;
mod matroid;
pub mod natural;
mod par;
mod poly;
mod rank;
mod subset;
pub mod vectors;
pub mod zflats;

pub use error::Error;
pub use matroid::{BlockMap, Matroid};
pub use poly::Polymatroid;
pub use rank::Rank;
pub use subset::{subsets_of, GroundSet, Subset, MAX_GROUND};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Cap on the number of integer vectors any enumeration may visit.
///
/// Overridable through the `POLYMAT_MAX_SUBSETS` environment variable
/// (read once per process).
pub fn enumeration_cap() -> u64 {
    use std::sync::OnceLock;
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("POLYMAT_MAX_SUBSETS")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(1_000_000)
    })
}

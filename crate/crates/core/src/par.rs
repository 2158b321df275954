//! Data-parallel inner loops with a sequential fallback.
//!
//! Every helper is deterministic: results depend only on the inputs,
//! never on scheduling. With the `parallel` feature the loops run on
//! rayon; without it they are plain iterators producing byte-identical
//! output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Builds `(0..len).map(f)` as a vector.
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

/// First `Some` produced over `0..len`, by index order.
///
/// `f` must be pure; the parallel path evaluates it speculatively and
/// keeps the lowest-index hit, matching the sequential scan.
pub(crate) fn first_hit<T, F>(len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len)
            .into_par_iter()
            .filter_map(|i| f(i).map(|t| (i, t)))
            .min_by_key(|(i, _)| *i)
            .map(|(_, t)| t)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).find_map(f)
    }
}

/// Whether `f` holds on every index.
pub(crate) fn all_indexed<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().all(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).all(f)
    }
}

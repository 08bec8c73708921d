//! Execution helpers for the data-parallel sweeps. With the `parallel`
//! feature the work is distributed through rayon; otherwise the same
//! order-preserving operations run on plain iterators, so results are
//! identical either way.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<U>(n: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..n).map(f).collect()
}

/// First `Some` in index order; under rayon this is `find_map_first`, which
/// keeps the sequential answer deterministic.
#[cfg(feature = "parallel")]
pub(crate) fn find_first<U: Send>(n: usize, f: impl Fn(usize) -> Option<U> + Sync) -> Option<U> {
    use rayon::prelude::*;
    (0..n).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_first<U>(n: usize, f: impl Fn(usize) -> Option<U>) -> Option<U> {
    (0..n).find_map(f)
}

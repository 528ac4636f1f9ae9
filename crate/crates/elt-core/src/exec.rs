//! Data-parallel mapping over work items, with a sequential fallback when
//! the `parallel` feature is disabled.
//!
//! `map_collect` dispatches to rayon under the default feature set;
//! `map_collect_seq` is always sequential and exists so the two paths can
//! be compared directly (the bench suite does exactly that).

#[cfg(feature = "parallel")]
pub fn map_collect<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Sequential reference path, available regardless of features.
pub fn map_collect_seq<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    F: Fn(I) -> T,
{
    items.into_iter().map(f).collect()
}

/// Caps the worker pool. Takes effect once per process; later calls are
/// ignored. A no-op without the `parallel` feature.
#[cfg(feature = "parallel")]
pub fn configure_jobs(jobs: usize) {
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn configure_jobs(_jobs: usize) {}

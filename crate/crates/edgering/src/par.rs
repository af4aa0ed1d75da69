//! Thin switch between rayon data parallelism and a sequential fallback.
//!
//! With the default `parallel` feature the `map_collect` helper fans work out
//! over the rayon thread pool; without it the same call runs sequentially.
//! Every caller is a pure map over independent items, so results are
//! identical either way.

/// Applies `f` to every item and collects the results in input order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

/// Applies `f` to every item and collects the results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Sequential version, always available (used by the benchmark suite to
/// compare against the parallel path).
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

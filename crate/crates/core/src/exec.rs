//! Execution strategy for exhaustive scans.
//!
//! Hot loops in this crate are index scans over finite carriers. With the
//! `parallel` feature (default) they run on rayon; without it, or after
//! [`force_sequential`], they run as plain iterators. Every helper here is
//! deterministic: witness searches return the lowest-index witness no matter
//! how the scan is scheduled, so reports are byte-identical across
//! parallelism settings.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Globally force sequential execution even when the `parallel` feature is
/// compiled in. Used by benchmarks (to compare both strategies in one run)
/// and by determinism tests.
pub fn force_sequential(yes: bool) {
    FORCE_SEQUENTIAL.store(yes, Ordering::SeqCst);
}

/// Whether scans currently run on rayon.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

/// `true` iff `f(i)` holds for every `i < n`.
pub fn all<F>(n: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().all(f);
    }
    (0..n).all(f)
}

/// First `Some` value of `f(i)` in index order, scanning `0..n`.
pub fn find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        // `find_map_first` keeps the lowest-index result, matching the
        // sequential scan exactly.
        return (0..n).into_par_iter().find_map_first(f);
    }
    (0..n).find_map(f)
}

/// `f(i)` for every `i < n`, collected in index order.
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn find_first_returns_lowest_index() {
        // Many indices qualify; the scan must still pick 10.
        let hit = find_first(100_000, |i| if i >= 10 { Some(i) } else { None });
        assert_eq!(hit, Some(10));
    }

    #[test]
    fn sequential_override_gives_same_answers() {
        let par = map_collect(1000, |i| i * i);
        force_sequential(true);
        let seq = map_collect(1000, |i| i * i);
        force_sequential(false);
        assert_eq!(par, seq);
        assert!(all(1000, |i| par[i] == i * i));
    }
}

//! Execution helpers behind the `parallel` feature.
//!
//! Every parallel site in the crate maps a fixed partition of the input and
//! merges in input order, so the result does not depend on the number of
//! worker threads. The sequential fallback walks the same partition.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `f` on a rayon pool with `threads` workers when the `parallel`
/// feature is enabled; `None` uses the global default pool. Without the
/// feature the closure runs inline and `threads` is ignored.
#[cfg(feature = "parallel")]
pub fn with_thread_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("failed to build thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_pool<R: Send>(_threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Maps `f` over the inclusive range `lo..=hi`, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<U: Send>(lo: u64, hi: u64, f: impl Fn(u64) -> U + Sync + Send) -> Vec<U> {
    (lo..=hi).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<U: Send>(lo: u64, hi: u64, f: impl Fn(u64) -> U + Sync + Send) -> Vec<U> {
    (lo..=hi).map(f).collect()
}

/// Maps `f` over fixed-size chunks of `items`, preserving chunk order.
/// The chunk boundaries depend only on `size`, never on thread count.
#[cfg(feature = "parallel")]
pub(crate) fn map_chunks<T: Sync, U: Send>(
    items: &[T],
    size: usize,
    f: impl Fn(&[T]) -> U + Sync + Send,
) -> Vec<U> {
    items.par_chunks(size).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_chunks<T: Sync, U: Send>(
    items: &[T],
    size: usize,
    f: impl Fn(&[T]) -> U + Sync + Send,
) -> Vec<U> {
    items.chunks(size).map(f).collect()
}

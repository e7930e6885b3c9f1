//! Deterministic range partitioning.
//!
//! Every counter exposes its search space as an index range `0..len`. The
//! range is cut into contiguous chunks; chunks are counted independently and
//! the `u64` results are summed, so the total never depends on the number of
//! chunks or on how they are scheduled.

use std::ops::Range;

/// How partitions are executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Runs on the rayon pool when the `parallel` feature is enabled,
    /// otherwise identical to `Sequential`.
    #[default]
    Parallel,
}

/// Splits `0..len` into `parts` contiguous, disjoint, covering ranges.
pub fn split(len: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    (0..parts)
        .map(|i| {
            let lo = (len as u128 * i as u128 / parts as u128) as u64;
            let hi = (len as u128 * (i + 1) as u128 / parts as u128) as u64;
            lo..hi
        })
        .filter(|r| !r.is_empty())
        .collect()
}

/// Partition count used when the caller does not pick one.
pub fn default_partitions() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads() * 8
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Sums `count` over the chunks of `0..len`.
pub fn sum_ranges<F>(len: u64, parts: usize, strategy: Strategy, count: F) -> u64
where
    F: Fn(Range<u64>) -> u64 + Sync + Send,
{
    let ranges = split(len, parts);
    match strategy {
        Strategy::Sequential => ranges.into_iter().map(count).sum(),
        Strategy::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                ranges.into_par_iter().map(count).sum()
            }
            #[cfg(not(feature = "parallel"))]
            {
                ranges.into_iter().map(count).sum()
            }
        }
    }
}

/// Order-preserving parallel map over a slice.
pub fn map_collect<T, U, F>(items: &[T], strategy: Strategy, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(f).collect(),
        Strategy::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

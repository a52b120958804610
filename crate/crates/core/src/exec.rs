//! Index-range fan-out with a sequential fallback.
//!
//! With the `parallel` feature enabled, [`Strategy::Parallel`] runs on the
//! rayon global pool; without it, both strategies run sequentially. Results
//! are always returned in index order, so aggregation is deterministic
//! regardless of how work was partitioned.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this strategy actually runs on multiple threads in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// `range.map(f).collect()`, in index order.
pub fn map_range<T, F>(strategy: Strategy, range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    let _ = strategy;
    range.map(f).collect()
}

/// Exact integer sum of `f` over `range`.
pub fn sum_range<F>(strategy: Strategy, range: Range<u64>, f: F) -> i64
where
    F: Fn(u64) -> i64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).sum();
    }
    let _ = strategy;
    range.map(f).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: u64| (i * i % 17) as i64 - 8;
        let seq = map_range(Strategy::Sequential, 0..1000, f);
        let par = map_range(Strategy::Parallel, 0..1000, f);
        assert_eq!(seq, par);
        assert_eq!(
            sum_range(Strategy::Sequential, 0..1000, f),
            sum_range(Strategy::Parallel, 0..1000, f)
        );
    }
}

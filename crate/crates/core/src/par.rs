//! Sequential or rayon-backed execution of independent work items.
//!
//! Sweeps over parameters, Monte Carlo trials and per-element scans go
//! through [`Strategy`]. The rayon path only exists with the `parallel`
//! feature; results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to `Parallel` when the feature is enabled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Strategy {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
        }
    }

    pub fn map_range<R, F>(self, range: std::ops::Range<u32>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u32) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => range.map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => range.into_par_iter().map(f).collect(),
        }
    }
}

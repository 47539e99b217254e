//! Sequential or rayon-backed evaluation of the data-parallel loops.
//!
//! Every reduction used with these helpers is exact and commutative (set
//! union, integer polynomial sums), so results do not depend on scheduling.
//! Without the `parallel` feature, [`Execution::Parallel`] runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::weyl::DEFAULT_BRUTE_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually fans out to a thread pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Knobs shared by every full-Weyl-group computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Largest rank whose Weyl group may be enumerated.
    pub brute_cap: usize,
    pub execution: Execution,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            brute_cap: DEFAULT_BRUTE_CAP,
            execution: Execution::default(),
        }
    }
}

impl Settings {
    pub fn sequential() -> Self {
        Settings {
            execution: Execution::Sequential,
            ..Settings::default()
        }
    }

    pub fn with_brute_cap(self, brute_cap: usize) -> Self {
        Settings { brute_cap, ..self }
    }
}

pub(crate) fn map_reduce<T, R, I, M, F>(items: &[T], exec: Execution, identity: I, map: M, reduce: F) -> R
where
    T: Sync,
    R: Send,
    I: Fn() -> R + Sync + Send,
    M: Fn(&T) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(map).reduce(identity, reduce);
    }
    let _ = exec;
    items.iter().map(map).fold(identity(), reduce)
}

/// Keeps the items satisfying `keep`, in their original order.
pub(crate) fn filter<T, K>(items: Vec<T>, exec: Execution, keep: K) -> Vec<T>
where
    T: Send + Sync,
    K: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.into_par_iter().filter(|x| keep(x)).collect();
    }
    let _ = exec;
    items.into_iter().filter(|x| keep(x)).collect()
}

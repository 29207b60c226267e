//! Execution strategy for the data-parallel loops (trial batches, set
//! products, enumeration). Without the `parallel` feature every strategy
//! runs sequentially; results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `(0..n).map(f)` collected in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Maps each chunk of `items` and folds the partial results with `merge`.
    /// `merge` must be associative and commutative for the result to be
    /// schedule independent.
    pub fn fold_chunks<I, T, F, M>(self, items: &[I], chunk: usize, f: F, merge: M) -> Option<T>
    where
        I: Sync,
        T: Send,
        F: Fn(&[I]) -> T + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let chunk = chunk.max(1);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_chunks(chunk).map(f).reduce_with(merge),
            _ => items.chunks(chunk).map(f).reduce(merge),
        }
    }
}

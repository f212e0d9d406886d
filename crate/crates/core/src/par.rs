//! Data-parallel helpers. With the `parallel` feature (default) these fan out
//! over rayon; without it they fall back to plain sequential iteration.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over owned items, in parallel when the `parallel` feature is enabled.
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

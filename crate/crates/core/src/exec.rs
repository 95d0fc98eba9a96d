//! Data-parallel helpers that fall back to plain iterators when the
//! `parallel` feature is disabled.
//!
//! Every helper preserves input order in its result, so callers get the same
//! answer regardless of the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items` and collects the results in input order.
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Returns the result for the first item (in input order) for which `f`
/// yields `Some`.
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// Conjunction of a fallible predicate over `items`.
///
/// Stops early on the first `false` or error. When several items fail the
/// error reported is the first one in input order.
pub fn try_all<T, E, F>(items: &[T], f: F) -> Result<bool, E>
where
    T: Sync,
    E: Send,
    F: Fn(&T) -> Result<bool, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let outcome = items
            .par_iter()
            .map(f)
            .find_first(|r| !matches!(r, Ok(true)));
        match outcome {
            None => Ok(true),
            Some(r) => r,
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        for item in items {
            if !f(item)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// True when the crate was built with the `parallel` feature.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Configures the global worker pool. A no-op without the `parallel` feature.
///
/// Fails if the pool was already initialised.
pub fn set_threads(threads: usize) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        Ok(())
    }
}

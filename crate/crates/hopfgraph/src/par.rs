//! Data-parallel mapping with a sequential fallback.
//!
//! Everything in this crate is a pure function over immutable values, so the
//! hot enumeration loops (subset sweeps, support coefficient evaluation,
//! verification sweeps) are embarrassingly parallel. With the `parallel`
//! feature (on by default) they fan out over rayon; without it the same entry
//! points run sequentially. Results are collected in input order, so output
//! is deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is active.
pub fn map_vec<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
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

/// Maps `f` over the integer range `0..len`.
pub fn map_range<O, F>(len: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}

//! Data-parallel batch helpers.
//!
//! Batch simulation, detection and relation building are embarrassingly
//! parallel over seeds or traces. With the `parallel` feature (on by
//! default) the `map_*` functions fan out over rayon's thread pool; without
//! it they fall back to plain sequential loops. Results are collected in
//! input order either way, so output is identical across both paths.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n` in order.
pub fn map_indexed<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], available regardless of features
/// (benchmarks compare the two).
pub fn map_indexed_seq<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice in order.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
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

/// Sequential twin of [`map_slice`].
pub fn map_slice_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let via_default = map_indexed(100, |i| i * i);
        let via_seq = map_indexed_seq(100, |i| i * i);
        assert_eq!(via_default, via_seq);

        let items: Vec<u64> = (0..50).collect();
        assert_eq!(
            map_slice(&items, |x| x + 1),
            map_slice_seq(&items, |x| x + 1)
        );
    }
}

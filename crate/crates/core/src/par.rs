//! Data-parallel map helpers.
//!
//! Batch work (world generation, rollout collection, evaluation episodes)
//! is expressed as an order-preserving map over indices. With the
//! `parallel` feature the map runs on the rayon pool; without it, or with
//! [`ExecMode::Seq`], it runs sequentially. Work items must derive their
//! own RNG stream from their index, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to execute a batch map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Force sequential execution (also the only behavior without the
    /// `parallel` feature).
    Seq,
    /// Use the rayon pool when compiled with the `parallel` feature.
    #[default]
    Par,
}

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_indexed<T, F>(n: usize, mode: ExecMode, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    match mode {
        ExecMode::Seq => (0..n).map(f).collect(),
        ExecMode::Par => {
            #[cfg(feature = "parallel")]
            {
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..n).map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let work = |i: usize| {
            let mut acc = i as u64;
            for _ in 0..100 {
                acc = acc.wrapping_mul(6364136223846793005).wrapping_add(1);
            }
            acc
        };
        let seq = map_indexed(64, ExecMode::Seq, work);
        let par = map_indexed(64, ExecMode::Par, work);
        assert_eq!(seq, par);
    }
}

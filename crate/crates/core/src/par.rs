//! Data-parallel map over case indices, with a sequential fallback when the
//! `parallel` feature is off or a caller asks for sequential execution.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether this build can run cases on the rayon pool.
pub const PARALLEL_AVAILABLE: bool = cfg!(feature = "parallel");

/// `(0..count).map(f)`, in index order, possibly on several threads.
pub fn map_indices<T, F>(count: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_either_way() {
        let seq = map_indices(100, false, |i| i * i);
        let par = map_indices(100, true, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}

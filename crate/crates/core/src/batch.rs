//! Order-preserving batch evaluation.
//!
//! Work over a batch of independent inputs (graphs in a scan, random corpora
//! in property suites) goes through [`map_ordered`]. With the `parallel`
//! feature the items are spread over the rayon pool; without it, or with
//! [`ExecMode::Sequential`], they run in order on the calling thread. Either
//! way the output vector is indexed like the input.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// Whether `Parallel` actually fans out in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

pub fn map_ordered<T, R, F>(items: &[T], mode: ExecMode, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    match mode {
        ExecMode::Sequential => sequential(items, f),
        ExecMode::Parallel => parallel(items, f),
    }
}

fn sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

#[cfg(feature = "parallel")]
fn parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(usize, &T) -> R,
{
    sequential(items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_ordered(&xs, ExecMode::Sequential, |i, x| x * x + i as u64);
        let b = map_ordered(&xs, ExecMode::Parallel, |i, x| x * x + i as u64);
        assert_eq!(a, b);
    }
}

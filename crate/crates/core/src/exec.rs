//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the `Parallel` strategy runs on rayon;
//! without it every strategy runs sequentially. Results are always returned in
//! input order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;

    use super::Execution;

    pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match exec {
            Execution::Sequential => items.iter().map(f).collect(),
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    pub fn find_first<R, F>(exec: Execution, n: usize, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        match exec {
            Execution::Sequential => (0..n).find_map(f),
            Execution::Parallel => (0..n).into_par_iter().map(f).find_first(Option::is_some).flatten(),
        }
    }

    pub fn with_threads<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
        match jobs {
            None => f(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map(|pool| pool.install(f))
                .unwrap_or_else(|e| panic!("cannot build a pool of {n} workers: {e}")),
        }
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    use super::Execution;

    pub fn map<T, R, F>(_exec: Execution, items: &[T], f: F) -> Vec<R>
    where
        F: Fn(&T) -> R,
    {
        items.iter().map(f).collect()
    }

    pub fn find_first<R, F>(_exec: Execution, n: usize, f: F) -> Option<R>
    where
        F: Fn(usize) -> Option<R>,
    {
        (0..n).find_map(f)
    }

    pub fn with_threads<R>(_jobs: Option<usize>, f: impl FnOnce() -> R) -> R {
        f()
    }
}

pub use imp::{find_first, map, with_threads};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..200).collect();
        let seq = map(Execution::Sequential, &xs, |x| x * x);
        let par = map(Execution::Parallel, &xs, |x| x * x);
        assert_eq!(seq, par);
        let hit = |i: usize| (i % 37 == 36).then_some(i);
        assert_eq!(find_first(Execution::Sequential, 200, hit), Some(36));
        assert_eq!(find_first(Execution::Parallel, 200, hit), Some(36));
        assert_eq!(with_threads(Some(2), || 5), 5);
    }
}

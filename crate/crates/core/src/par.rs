//! Data-parallel helpers. With the `parallel` feature off, or with
//! [`Execution::Sequential`], everything runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can run in parallel at all.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn any<T, F>(self, items: &[T], f: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().any(f);
        }
        items.iter().any(f)
    }

    /// Some item for which `f` returns `Some`, preferring the earliest one.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().find_map_first(f);
        }
        items.iter().find_map(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let sq = |x: &u64| x * x;
        assert_eq!(Execution::Sequential.map(&xs, sq), Execution::Parallel.map(&xs, sq));
        assert!(Execution::Parallel.any(&xs, |&x| x == 999));
        assert!(!Execution::Sequential.any(&xs, |&x| x > 999));
        let first = |x: &u64| (x % 7 == 3).then_some(*x);
        assert_eq!(Execution::Parallel.find_first(&xs, first), Some(3));
        assert_eq!(Execution::Sequential.find_first(&xs, first), Some(3));
    }
}

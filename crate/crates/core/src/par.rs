//! Data-parallel maps over independent work items.
//!
//! With the `parallel` feature the maps run on the rayon pool unless the
//! process-wide mode is switched to [`Exec::Sequential`]; without it they
//! always run in order on the calling thread. Output order never depends on
//! scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Parallel,
    Sequential,
}

static SEQUENTIAL: AtomicBool = AtomicBool::new(false);

pub fn set_exec(mode: Exec) {
    SEQUENTIAL.store(mode == Exec::Sequential, Ordering::Relaxed);
}

/// The mode in effect; always sequential without the `parallel` feature.
pub fn exec() -> Exec {
    if cfg!(feature = "parallel") && !SEQUENTIAL.load(Ordering::Relaxed) {
        Exec::Parallel
    } else {
        Exec::Sequential
    }
}

/// `items.iter().map(f)`, in input order.
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec() == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..1000).collect();
        let want: Vec<u64> = v.iter().map(|x| x * x).collect();
        assert_eq!(par_map(&v, |x| x * x), want);
    }
}

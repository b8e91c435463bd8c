//! Thread-count control for the data-parallel drivers.

use std::env;

/// Environment variable that caps the worker count.
pub const THREADS_ENV: &str = "NETSLOPE_THREADS";

/// Worker count requested through the environment, if any.
pub fn env_threads() -> Option<usize> {
    env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Runs `f` inside a dedicated pool of `n` workers.
pub fn with_threads<T: Send>(n: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .expect("failed to build thread pool");
    pool.install(f)
}

/// Runs `f` in a pool sized by `NETSLOPE_THREADS`, or in the global pool
/// when the variable is unset.
pub fn with_env_threads<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match env_threads() {
        Some(n) => with_threads(n, f),
        None => f(),
    }
}

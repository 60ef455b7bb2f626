//! Fixed inputs shared by the benchmarks.

use superfrob::{HookParams, Multipartition};

/// `(m, n)` sizes the benchmarks sweep.
pub const SIZES: [(usize, usize); 4] = [(1, 3), (1, 4), (2, 2), (2, 3)];

/// Default parameters and the widest column label for a size.
pub fn setup(m: usize, n: usize) -> (HookParams, Multipartition) {
    let params = HookParams::uniform(m, n).expect("m >= 1");
    let mu = Multipartition::enumerate(n, m)
        .expect("m >= 1")
        .pop()
        .expect("at least one multipartition");
    (params, mu)
}

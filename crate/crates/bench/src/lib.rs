//! Fixed inputs shared by the benchmarks.

use graphcalc::{make_family, Family, Pseudograph};

/// A family instance; panics only on parameters the benches never pass.
pub fn family(f: Family) -> Pseudograph {
    make_family(f).expect("benchmark family parameters are valid")
}

/// Wheels `W_3 ..= W_max`, the standard spanning-tree workload.
pub fn wheels(max: usize) -> Vec<Pseudograph> {
    (3..=max).map(|n| family(Family::Wheel(n))).collect()
}

//! Fixtures shared by the benchmarks.

use cosetlab_core::{Group, GroupSymbol};

/// Groups small enough to benchmark every stage on.
pub const GROUPS: [&str; 5] = ["A3", "B3", "A4", "D4", "F4"];

pub fn group(symbol: &str) -> Group {
    let s: GroupSymbol = symbol.parse().expect("benchmark symbols are valid");
    Group::new(s).expect("benchmark groups fit the default cap")
}

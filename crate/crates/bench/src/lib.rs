//! Shared inputs for the benchmarks.

use abchrome::families::{self, gen_petersen};
use abchrome::Graph;

/// Small named cubic graphs used across the benchmarks.
pub fn cubic_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", families::complete(4)),
        ("K33", families::k33().graph),
        ("cube", families::cube()),
        ("petersen", gen_petersen(5, 2).unwrap().graph),
        ("G(6,1)", gen_petersen(6, 1).unwrap().graph),
        ("G1", families::g1().graph),
    ]
}

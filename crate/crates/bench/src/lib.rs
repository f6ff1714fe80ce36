//! Benchmark fixtures shared by the criterion benches.

use twodom_core::harness::{random_cactus, random_connected_graph};
use twodom_core::{FamilyParams, Graph};

/// Random cacti of increasing order for solver comparisons.
pub fn cactus_suite(sizes: &[usize], seed: u64) -> Vec<Graph> {
    sizes
        .iter()
        .map(|&n| random_cactus(n, 0.5, seed ^ n as u64).expect("valid generator parameters"))
        .collect()
}

/// Random connected graphs with edge probability `p`.
pub fn dense_suite(sizes: &[usize], p: f64, seed: u64) -> Vec<Graph> {
    sizes
        .iter()
        .map(|&n| random_connected_graph(n, p, seed ^ n as u64).expect("valid generator parameters"))
        .collect()
}

/// The sporadic family member with four cycles of lengths 4, 7, 10, 13.
pub fn sporadic_member() -> Graph {
    FamilyParams::new(4, vec![1, 2, 3, 4]).expect("valid parameters").generate()
}

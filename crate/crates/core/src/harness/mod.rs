//! Random instance generators and the conjecture scanner.

mod generators;
mod rule_instances;
mod scan;

pub use generators::{
    random_bipartite_cactus, random_bipartite_cactus_with, random_cactus, random_cactus_with, random_connected_graph,
    random_connected_graph_with, random_min_degree3, random_min_degree3_with, random_tree, random_tree_with,
    rng_from_seed, CactusConstraint, REJECTION_LIMIT,
};
pub use rule_instances::rule_instance;
pub use scan::{graph_hash, scan, scan_instance, GraphClass, InstanceRecord, ScanReport, ScanSpec, ScanSummary};

//! Structural recognizers for cacti: block decomposition, bipartiteness,
//! exit vertices, outer cycles, suns, and the local features used by the
//! reduction rules.

mod cactus;
mod cycles;
mod features;

pub use cactus::{decompose_cactus, is_bipartite, is_cactus, Block, BlockCutTree, CactusDecomposition};
pub use cycles::{
    all_edges_on_cycles, cycle_membership, cycle_reports, exit_vertices, has_sun, outer_cycles, sun_free_hypotheses,
    CycleReport, SunFreeHypotheses,
};
pub use features::{
    find_induced_p5_deg2, find_pendant_p4, find_strong_supports, find_subdivided_stars, hanging_trees,
    vertices_on_cycles, DegreeTwoPath, Feature, HangingTree, PendantPath, StrongSupport, SubdividedStar,
};

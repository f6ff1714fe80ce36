//! Exact 2-domination number and annihilation number toolkit.
//!
//! The crate computes `γ₂(G)` and `a(G)` exactly, generates the cactus family
//! on which `γ₂ − a` grows without bound, applies checked graph reductions
//! that preserve the bound `γ₂ ≤ a + 1`, and scans random graph classes for
//! violations of that bound.

pub mod error;
pub mod family;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod reductions;
pub mod structure;

pub use error::{Error, Result};
pub use family::{gap_witness, FamilyParams, GapWitness};
pub use graph::{DegreeSequence, Graph, Vertex};
pub use invariants::{
    annihilation, conjecture_check, gamma2, is_2_dominating, AnnihilationCertificate, Backend, ConjectureRecord,
    DominationCertificate,
};
pub use reductions::{reduce_trace, verify_step, ReductionStep, ReductionTrace, Rule};
pub use structure::{CactusDecomposition, CycleReport, Feature};

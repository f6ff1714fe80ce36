//! Checked graph reductions.
//!
//! Each rule maps a graph `G` to a smaller connected graph `G′` such that
//! `γ₂(G′) ≤ a(G′) + 1` implies `γ₂(G) ≤ a(G) + 1`. For most rules the
//! implication comes from an offset `s` with `γ₂(G) ≤ γ₂(G′) + s` and
//! `a(G) ≥ a(G′) + s`; [`verify_step`] checks those inequalities exactly.
//! [`reduce_trace`] applies rules in a fixed priority until `K₂` is reached
//! or nothing applies.

mod engine;
mod rules;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::graph::{Edge, Graph, Vertex};

pub use engine::{
    applicable, reduce_trace, reduce_trace_with, try_engine_rule, ReduceOptions, ReductionTrace, TerminalReason,
};
pub use rules::{
    apply_cycle_edge, apply_deep_tree, apply_induced_path, apply_pendant_path, apply_strong_support,
    apply_subdivided_star, cycle_trim, tree_trim,
};
pub use verify::{verify_step, verify_step_with_budget, StepVerification};

/// Reduction rules, in engine priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Delete a strong support vertex together with its leaves.
    StrongSupport,
    /// Delete a cycle edge at a vertex of degree at least 3 when some vertex
    /// of degree at most 2 misses the annihilation set.
    CycleEdge,
    /// Contract an induced path with three inner degree-2 vertices.
    InducedPath,
    /// Delete a pendant path of three vertices.
    PendantPath,
    /// Shorten a hanging tree of height at least 3.
    DeepTree,
    /// Delete a subdivided star hanging at a degree-2 cycle vertex.
    SubdividedStar,
    /// Delete a leaf of a tree.
    TreeTrim,
    /// Delete an edge of a cycle.
    CycleTrim,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::StrongSupport,
        Rule::CycleEdge,
        Rule::InducedPath,
        Rule::PendantPath,
        Rule::DeepTree,
        Rule::SubdividedStar,
        Rule::TreeTrim,
        Rule::CycleTrim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::StrongSupport => "strong_support",
            Rule::CycleEdge => "cycle_edge",
            Rule::InducedPath => "induced_path",
            Rule::PendantPath => "pendant_path",
            Rule::DeepTree => "deep_tree",
            Rule::SubdividedStar => "subdivided_star",
            Rule::TreeTrim => "tree_trim",
            Rule::CycleTrim => "cycle_trim",
        }
    }

    /// Rules guaranteed to strictly lower `f(G) = n + 3m + n₁`.
    pub fn decreases_potential(self) -> bool {
        self != Rule::StrongSupport
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchor {
    pub role: String,
    pub id: Vertex,
}

pub(crate) fn anchor(role: &str, id: Vertex) -> Anchor {
    Anchor { role: role.to_string(), id }
}

/// One rule application. Replaying it on the input graph means: delete
/// `removed_edges`, then `removed_vertices`, then add `added_edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub anchors: Vec<Anchor>,
    pub removed_vertices: Vec<Vertex>,
    pub removed_edges: Vec<Edge>,
    pub added_edges: Vec<Edge>,
    /// `None` when the rule carries no offset bound.
    pub offset: Option<usize>,
    pub f_before: usize,
    pub f_after: usize,
}

impl ReductionStep {
    pub fn replay(&self, g: &Graph) -> Result<Graph, Error> {
        let removed: BTreeSet<Vertex> = self.removed_vertices.iter().copied().collect();
        g.delete_edges(&self.removed_edges)?
            .delete_vertices(&removed)?
            .add_edges(&self.added_edges)
    }

    /// Text form: `rule role=id,... f_before->f_after`.
    pub fn to_line(&self) -> String {
        let anchors: Vec<String> = self.anchors.iter().map(|a| format!("{}={}", a.role, a.id)).collect();
        format!("{} {} {}->{}", self.rule, anchors.join(","), self.f_before, self.f_after)
    }
}

/// A rule application together with the graph it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub step: ReductionStep,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("vertex {0} is not a strong support vertex")]
    NotStrongSupport(Vertex),
    #[error("the reduced graph would be disconnected")]
    Disconnects,
    #[error("graph has {0} vertices, too few for this rule")]
    TooSmall(usize),
    #[error("the reduced graph would be trivial")]
    TrivialResult,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is a tree; use tree_trim")]
    IsTree,
    #[error("graph is a cycle; use cycle_trim")]
    IsCycle,
    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not a cycle")]
    NotCycle,
    #[error("d* = {0:?}; this rule needs d* <= 2")]
    DStarTooLarge(Option<usize>),
    #[error("d* = {0:?}; this rule needs d* >= 3")]
    DStarTooSmall(Option<usize>),
    #[error("no qualifying cycle edge")]
    NoCycleEdge,
    #[error("feature does not match the graph")]
    StaleFeature,
    #[error("attachment vertex {0} has degree below 3")]
    LowAttachDegree(Vertex),
    #[error("tree height {0} is below 3")]
    TreeTooShallow(usize),
    #[error("vertex {0} is a strong support vertex; apply strong_support instead")]
    UseStrongSupport(Vertex),
    #[error("subdivided star has {0} legs; at least 2 are needed")]
    TooFewLegs(usize),
    #[error("star center is not a degree-2 cycle vertex of the host")]
    CenterNotOnCycle,
    #[error("result is not a cactus although the input is")]
    CactusLost,
    #[error(transparent)]
    Graph(#[from] Error),
}

//! The individual rules. Each function checks its structural preconditions,
//! builds `G′` and records the step. Standing assumptions the proofs make
//! about the whole graph (such as `d* ≥ 3`) are enforced by the engine, not
//! here, so the rules can also be exercised on small hand-built examples.

use std::collections::{BTreeSet, HashMap};

use crate::graph::{edge, Edge, Graph, Vertex};
use crate::invariants::annihilation;
use crate::structure::{DegreeTwoPath, HangingTree, PendantPath, SubdividedStar};

use super::{anchor, Anchor, Reduction, ReductionStep, Rule, RuleError};

struct Change {
    rule: Rule,
    anchors: Vec<Anchor>,
    removed_vertices: Vec<Vertex>,
    removed_edges: Vec<Edge>,
    added_edges: Vec<Edge>,
    offset: Option<usize>,
}

impl Change {
    fn new(rule: Rule, anchors: Vec<Anchor>, offset: Option<usize>) -> Self {
        Self { rule, anchors, removed_vertices: Vec::new(), removed_edges: Vec::new(), added_edges: Vec::new(), offset }
    }

    /// Builds `G′`, insisting that it is connected and nontrivial.
    fn finish(self, g: &Graph) -> Result<Reduction, RuleError> {
        let mut step = ReductionStep {
            rule: self.rule,
            anchors: self.anchors,
            removed_vertices: self.removed_vertices,
            removed_edges: self.removed_edges,
            added_edges: self.added_edges,
            offset: self.offset,
            f_before: g.potential(),
            f_after: 0,
        };
        let graph = step.replay(g)?;
        if graph.n() < 2 {
            return Err(RuleError::TrivialResult);
        }
        if !graph.is_connected() {
            return Err(RuleError::Disconnects);
        }
        step.f_after = graph.potential();
        Ok(Reduction { step, graph })
    }
}

fn require_connected(g: &Graph) -> Result<(), RuleError> {
    if g.is_connected() && !g.is_empty() {
        Ok(())
    } else {
        Err(RuleError::NotConnected)
    }
}

/// Deletes the strong support vertex `u` and all of its leaf neighbors. No
/// offset is recorded; only the end implication is claimed.
pub fn apply_strong_support(g: &Graph, u: Vertex) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if g.n() < 4 {
        return Err(RuleError::TooSmall(g.n()));
    }
    if !g.contains(u) {
        return Err(RuleError::NotStrongSupport(u));
    }
    let leaves: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&x| g.is_leaf(x)).collect();
    if leaves.len() < 2 {
        return Err(RuleError::NotStrongSupport(u));
    }
    let mut anchors = vec![anchor("support", u)];
    anchors.extend(leaves.iter().map(|&x| anchor("leaf", x)));
    let mut change = Change::new(Rule::StrongSupport, anchors, None);
    change.removed_vertices = std::iter::once(u).chain(leaves).collect();
    change.finish(g)
}

fn is_bridge(g: &Graph, e: Edge) -> bool {
    g.delete_edges(&[e]).map_or(true, |h| !h.is_connected())
}

/// Deletes the lexicographically first cycle edge `vu` with `d(v) ≥ 3`,
/// provided `d*(G) ≤ 2`.
pub fn apply_cycle_edge(g: &Graph) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if g.n() < 3 {
        return Err(RuleError::TooSmall(g.n()));
    }
    if g.is_tree() {
        return Err(RuleError::IsTree);
    }
    if g.is_cycle() {
        return Err(RuleError::IsCycle);
    }
    let d_star = annihilation(g).d_star;
    if d_star.is_some_and(|d| d > 2) {
        return Err(RuleError::DStarTooLarge(d_star));
    }
    let (v, u) = g
        .vertices()
        .filter(|&v| g.degree(v) >= 3)
        .flat_map(|v| g.neighbors(v).iter().map(move |&u| (v, u)))
        .find(|&(v, u)| !is_bridge(g, edge(v, u)))
        .ok_or(RuleError::NoCycleEdge)?;
    let mut change = Change::new(Rule::CycleEdge, vec![anchor("v", v), anchor("u", u)], Some(0));
    change.removed_edges = vec![edge(v, u)];
    change.finish(g)
}

/// Deletes the smallest-id leaf of a tree on at least three vertices.
pub fn tree_trim(g: &Graph) -> Result<Reduction, RuleError> {
    if !g.is_tree() {
        return Err(RuleError::NotTree);
    }
    if g.n() < 3 {
        return Err(RuleError::TooSmall(g.n()));
    }
    let leaf = g.leaves().next().expect("a tree on 3+ vertices has leaves");
    let mut change = Change::new(Rule::TreeTrim, vec![anchor("leaf", leaf)], None);
    change.removed_vertices = vec![leaf];
    change.finish(g)
}

/// Deletes the edge from the smallest vertex of a cycle to its smaller
/// neighbor.
pub fn cycle_trim(g: &Graph) -> Result<Reduction, RuleError> {
    if !g.is_cycle() {
        return Err(RuleError::NotCycle);
    }
    let v = g.vertices().next().expect("cycles are nonempty");
    let u = *g.neighbors(v).first().expect("cycle vertices have neighbors");
    let mut change = Change::new(Rule::CycleTrim, vec![anchor("v", v), anchor("u", u)], None);
    change.removed_edges = vec![edge(v, u)];
    change.finish(g)
}

/// Replaces the induced path `v u₁ u₂ u₃ w` by the edge `vw`.
pub fn apply_induced_path(g: &Graph, p: &DegreeTwoPath) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if !p.holds(g) {
        return Err(RuleError::StaleFeature);
    }
    assert!(!g.has_edge(p.start, p.end), "an induced P5 has no chord");
    let [u1, u2, u3] = p.inner;
    let anchors = vec![
        anchor("v", p.start),
        anchor("u1", u1),
        anchor("u2", u2),
        anchor("u3", u3),
        anchor("w", p.end),
    ];
    let mut change = Change::new(Rule::InducedPath, anchors, Some(2));
    change.removed_vertices = p.inner.to_vec();
    change.added_edges = vec![edge(p.start, p.end)];
    change.finish(g)
}

/// Deletes the three path vertices of a pendant `P₄`.
pub fn apply_pendant_path(g: &Graph, p: &PendantPath) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if !p.holds(g) {
        return Err(RuleError::StaleFeature);
    }
    let anchors = vec![anchor("u1", p.leaf), anchor("u2", p.near), anchor("u3", p.far), anchor("v", p.attach)];
    let mut change = Change::new(Rule::PendantPath, anchors, Some(2));
    change.removed_vertices = vec![p.leaf, p.near, p.far];
    change.finish(g)
}

/// Parent pointers of the hanging tree, directed towards its root.
fn parents(g: &Graph, tree: &HangingTree) -> HashMap<Vertex, Vertex> {
    let members: BTreeSet<Vertex> = tree.vertices.iter().copied().collect();
    let mut parent = HashMap::new();
    let mut frontier = vec![tree.root];
    let mut seen = BTreeSet::from([tree.root]);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in frontier {
            for &w in g.neighbors(u) {
                if members.contains(&w) && seen.insert(w) {
                    parent.insert(w, u);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    parent
}

/// Shortens a hanging tree of height at least 3: with `v₁` its deepest
/// vertex and `v₁v₂v₃v₄` the path towards the root, deletes `v₁, v₂, v₃` and
/// reattaches the other children of `v₃` to `v₄`.
pub fn apply_deep_tree(g: &Graph, tree: &HangingTree) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if !tree.holds(g) {
        return Err(RuleError::StaleFeature);
    }
    if tree.height < 3 {
        return Err(RuleError::TreeTooShallow(tree.height));
    }
    let parent = parents(g, tree);
    let v1 = tree.deepest;
    let v2 = parent[&v1];
    let v3 = parent[&v2];
    let v4 = parent[&v3];
    if g.degree(v2) >= 3 {
        return Err(RuleError::UseStrongSupport(v2));
    }
    let moved: Vec<Vertex> = g.neighbors(v3).iter().copied().filter(|&x| x != v2 && x != v4).collect();
    let mut anchors = vec![anchor("v1", v1), anchor("v2", v2), anchor("v3", v3), anchor("v4", v4)];
    anchors.extend(moved.iter().map(|&x| anchor("w", x)));
    let mut change = Change::new(Rule::DeepTree, anchors, Some(2));
    change.removed_vertices = vec![v1, v2, v3];
    change.added_edges = moved.iter().map(|&x| edge(x, v4)).collect();
    change.finish(g)
}

/// Deletes a subdivided star `S_s(K_{1,s+t})`, `s ≥ 2`, whose center is a
/// degree-2 vertex of a cycle in the host, center included.
pub fn apply_subdivided_star(g: &Graph, star: &SubdividedStar) -> Result<Reduction, RuleError> {
    require_connected(g)?;
    if !star.holds(g) {
        return Err(RuleError::StaleFeature);
    }
    if star.s() < 2 {
        return Err(RuleError::TooFewLegs(star.s()));
    }
    if !star.on_cycle {
        return Err(RuleError::CenterNotOnCycle);
    }
    let mut anchors = vec![anchor("center", star.center)];
    for &(mid, tip) in &star.legs {
        anchors.push(anchor("mid", mid));
        anchors.push(anchor("tip", tip));
    }
    anchors.extend(star.leaves.iter().map(|&x| anchor("leaf", x)));
    let mut change = Change::new(Rule::SubdividedStar, anchors, Some(star.s() + star.t() + 1));
    change.removed_vertices = star.vertices().into_iter().collect();
    change.finish(g)
}

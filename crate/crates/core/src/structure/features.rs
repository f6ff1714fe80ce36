//! Local configurations consumed by the reduction rules.
//!
//! Every finder is exhaustive and returns features sorted by anchor ids.
//! Each feature can re-check its defining predicate against a graph, which
//! the reduction engine uses to reject stale features.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

use super::cactus::biconnected_blocks;

/// A vertex adjacent to at least two leaves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StrongSupport {
    pub support: Vertex,
    pub leaves: Vec<Vertex>,
}

impl StrongSupport {
    pub fn holds(&self, g: &Graph) -> bool {
        g.contains(self.support)
            && self.leaves.len() >= 2
            && self.leaves.iter().all(|&l| g.contains(l) && g.is_leaf(l) && g.has_edge(l, self.support))
    }
}

/// Path `leaf – near – far – attach` with `near` and `far` of degree two.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PendantPath {
    pub leaf: Vertex,
    pub near: Vertex,
    pub far: Vertex,
    pub attach: Vertex,
}

impl PendantPath {
    pub fn holds(&self, g: &Graph) -> bool {
        let vs = [self.leaf, self.near, self.far, self.attach];
        vs.iter().all(|&v| g.contains(v))
            && distinct(&vs)
            && g.degree(self.leaf) == 1
            && g.degree(self.near) == 2
            && g.degree(self.far) == 2
            && g.has_edge(self.leaf, self.near)
            && g.has_edge(self.near, self.far)
            && g.has_edge(self.far, self.attach)
    }
}

/// Induced path `start – inner[0] – inner[1] – inner[2] – end` whose inner
/// vertices have degree two; oriented so that `start < end`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeTwoPath {
    pub start: Vertex,
    pub inner: [Vertex; 3],
    pub end: Vertex,
}

impl DegreeTwoPath {
    pub fn holds(&self, g: &Graph) -> bool {
        let [a, b, c] = self.inner;
        let vs = [self.start, a, b, c, self.end];
        vs.iter().all(|&v| g.contains(v))
            && distinct(&vs)
            && self.inner.iter().all(|&u| g.degree(u) == 2)
            && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && !g.has_edge(self.start, self.end)
    }
}

/// Subdivided star hanging at `center`: `legs` are paths `center – mid – tip`
/// with `mid` of degree two and `tip` a leaf; `leaves` are leaf neighbors of
/// `center`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubdividedStar {
    pub center: Vertex,
    pub legs: Vec<(Vertex, Vertex)>,
    pub leaves: Vec<Vertex>,
    /// Degree of `center` outside the star.
    pub host_degree: usize,
    /// `center` lies on a cycle and has exactly its two cycle edges outside
    /// the star.
    pub on_cycle: bool,
}

impl SubdividedStar {
    /// Number of subdivided edges.
    pub fn s(&self) -> usize {
        self.legs.len()
    }

    /// Number of unsubdivided edges.
    pub fn t(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut vs: BTreeSet<Vertex> = self.leaves.iter().copied().collect();
        vs.insert(self.center);
        for &(m, t) in &self.legs {
            vs.insert(m);
            vs.insert(t);
        }
        vs
    }

    pub fn holds(&self, g: &Graph) -> bool {
        let c = self.center;
        if !g.contains(c) || self.legs.is_empty() {
            return false;
        }
        let legs_ok = self.legs.iter().all(|&(m, t)| {
            g.contains(m)
                && g.contains(t)
                && m != c
                && t != c
                && g.has_edge(c, m)
                && g.has_edge(m, t)
                && g.degree(m) == 2
                && g.degree(t) == 1
        });
        let leaves_ok = self
            .leaves
            .iter()
            .all(|&l| g.contains(l) && g.has_edge(c, l) && g.degree(l) == 1);
        let size = 1 + 2 * self.s() + self.t();
        legs_ok
            && leaves_ok
            && self.vertices().len() == size
            && g.degree(c) == self.s() + self.t() + self.host_degree
    }
}

/// Tree hanging at a cycle vertex `root`, containing every off-cycle branch
/// at `root`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HangingTree {
    pub root: Vertex,
    /// The cycle block `root` lies on.
    pub cycle: Vec<Vertex>,
    /// Tree vertices including `root`.
    pub vertices: Vec<Vertex>,
    /// Largest distance from `root`.
    pub height: usize,
    /// Graph radius of the tree.
    pub radius: usize,
    /// Smallest-id vertex at distance `height` from `root`.
    pub deepest: Vertex,
}

impl HangingTree {
    pub fn holds(&self, g: &Graph) -> bool {
        g.contains(self.root)
            && self.cycle.iter().all(|&v| g.contains(v))
            && self.cycle.contains(&self.root)
            && hanging_tree_at(g, &self.cycle, self.root).as_ref() == Some(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Feature {
    StrongSupport(StrongSupport),
    PendantP4(PendantPath),
    InducedP5Deg2(DegreeTwoPath),
    SubdividedStarAtCycle(SubdividedStar),
    HangingTree(HangingTree),
}

fn distinct(vs: &[Vertex]) -> bool {
    vs.iter().collect::<BTreeSet<_>>().len() == vs.len()
}

pub fn find_strong_supports(g: &Graph) -> Vec<StrongSupport> {
    g.vertices()
        .filter_map(|u| {
            let leaves: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&l| g.is_leaf(l)).collect();
            (leaves.len() >= 2).then_some(StrongSupport { support: u, leaves })
        })
        .collect()
}

fn other_neighbor(g: &Graph, v: Vertex, not: Vertex) -> Option<Vertex> {
    g.neighbors(v).iter().copied().find(|&u| u != not)
}

pub fn find_pendant_p4(g: &Graph) -> Vec<PendantPath> {
    let mut out: Vec<PendantPath> = g
        .leaves()
        .filter_map(|leaf| {
            let near = *g.neighbors(leaf).first()?;
            if g.degree(near) != 2 {
                return None;
            }
            let far = other_neighbor(g, near, leaf)?;
            if g.degree(far) != 2 {
                return None;
            }
            let attach = other_neighbor(g, far, near)?;
            let p = PendantPath { leaf, near, far, attach };
            p.holds(g).then_some(p)
        })
        .collect();
    out.sort();
    out
}

pub fn find_induced_p5_deg2(g: &Graph) -> Vec<DegreeTwoPath> {
    let mut out = BTreeSet::new();
    for mid in g.vertices().filter(|&v| g.degree(v) == 2) {
        let ns: Vec<Vertex> = g.neighbors(mid).iter().copied().collect();
        let (a, c) = (ns[0], ns[1]);
        if g.degree(a) != 2 || g.degree(c) != 2 {
            continue;
        }
        let (Some(start), Some(end)) = (other_neighbor(g, a, mid), other_neighbor(g, c, mid)) else {
            continue;
        };
        let p = if start < end {
            DegreeTwoPath { start, inner: [a, mid, c], end }
        } else {
            DegreeTwoPath { start: end, inner: [c, mid, a], end: start }
        };
        if p.holds(g) {
            out.insert(p);
        }
    }
    out.into_iter().collect()
}

/// Vertices incident to a non-bridge edge.
pub fn vertices_on_cycles(g: &Graph) -> BTreeSet<Vertex> {
    let d = g.dense();
    biconnected_blocks(&d)
        .into_iter()
        .filter(|b| b.len() > 1)
        .flat_map(|b| b.into_iter().flat_map(|(x, y)| [x, y]))
        .map(|i| d.ids[i])
        .collect()
}

/// Every vertex with at least one subdivided leg, with all its legs and
/// leaf neighbors.
pub fn find_subdivided_stars(g: &Graph) -> Vec<SubdividedStar> {
    let on_cycles = vertices_on_cycles(g);
    g.vertices()
        .filter_map(|c| {
            let mut legs = Vec::new();
            let mut leaves = Vec::new();
            for &x in g.neighbors(c) {
                if g.degree(x) == 1 {
                    leaves.push(x);
                } else if g.degree(x) == 2 {
                    let tip = other_neighbor(g, x, c)?;
                    if g.degree(tip) == 1 {
                        legs.push((x, tip));
                    }
                }
            }
            if legs.is_empty() {
                return None;
            }
            let host_degree = g.degree(c) - legs.len() - leaves.len();
            Some(SubdividedStar {
                center: c,
                on_cycle: host_degree == 2 && on_cycles.contains(&c),
                legs,
                leaves,
                host_degree,
            })
        })
        .collect()
}

fn hanging_tree_at(g: &Graph, cycle: &[Vertex], root: Vertex) -> Option<HangingTree> {
    let on_cycle: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut dist: HashMap<Vertex, usize> = HashMap::from([(root, 0)]);
    let mut queue = VecDeque::new();
    for &x in g.neighbors(root) {
        if !on_cycle.contains(&x) {
            dist.insert(x, 1);
            queue.push_back(x);
        }
    }
    if queue.is_empty() {
        return None;
    }
    let mut edges = queue.len();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if on_cycle.contains(&w) {
                if w != root {
                    return None;
                }
                continue;
            }
            let du = dist[&u];
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(du + 1);
                queue.push_back(w);
            }
            if u < w {
                edges += 1;
            }
        }
        if g.neighbors(u).contains(&root) && dist[&u] != 1 {
            return None;
        }
    }
    if edges + 1 != dist.len() {
        return None;
    }
    let mut vertices: Vec<Vertex> = dist.keys().copied().collect();
    vertices.sort_unstable();
    let height = *dist.values().max().unwrap();
    let deepest = vertices.iter().copied().find(|v| dist[v] == height).unwrap();
    let tree = g.delete_vertices(&g.vertices().filter(|v| !dist.contains_key(v)).collect()).ok()?;
    let radius = vertices
        .iter()
        .map(|&v| *tree.distances_from([v]).values().max().unwrap())
        .min()
        .unwrap();
    Some(HangingTree {
        root,
        cycle: cycle.to_vec(),
        vertices,
        height,
        radius,
        deepest,
    })
}

/// Trees hanging off the vertices of `cycle`. A vertex whose off-cycle part
/// contains a cycle contributes nothing.
pub fn hanging_trees(g: &Graph, cycle: &[Vertex]) -> Vec<HangingTree> {
    let mut roots: Vec<Vertex> = cycle.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    roots.sort_unstable();
    roots.into_iter().filter_map(|r| hanging_tree_at(g, cycle, r)).collect()
}

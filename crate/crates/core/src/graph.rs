//! Simple undirected graphs with stable vertex identifiers.
//!
//! Every transformation returns a new [`Graph`]; the input is never mutated.
//! Vertex ids survive deletions unchanged so that a reduced graph can be
//! related back to the graph it came from.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// An undirected edge stored with `u < v`.
pub type Edge = (Vertex, Vertex);

pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

/// Serialized form: explicit vertex ids plus an edge list.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            vertices: g.vertices().collect(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_parts(r.vertices, r.edges)
    }
}

/// Non-decreasing degrees; ties broken by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
    /// Vertex ids in the same (degree, id) order as `degrees`.
    pub order: Vec<Vertex>,
}

impl DegreeSequence {
    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n as Vertex).map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from explicit vertex ids and edges.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            if g.adj.insert(v, BTreeSet::new()).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        edges.push((0, n as Vertex - 1));
        Self::from_edges(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete edges are valid")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves as Vertex).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("petersen edges are valid")
    }

    pub(crate) fn insert_vertex(&mut self, v: Vertex) -> Result<()> {
        if self.adj.insert(v, BTreeSet::new()).is_some() {
            return Err(Error::DuplicateVertex(v));
        }
        Ok(())
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for x in [u, v] {
            if !self.adj.contains_key(&x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        if !self.adj.get_mut(&u).unwrap().insert(v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    /// Next unused vertex id.
    pub fn fresh_id(&self) -> Vertex {
        self.adj.keys().next_back().map_or(0, |&v| v + 1)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Vertex ids in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[&v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).max()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj
            .iter()
            .filter(|(_, s)| s.len() == 1)
            .map(|(&v, _)| v)
    }

    /// `n₁(G)`, the number of degree-one vertices.
    pub fn leaf_count(&self) -> usize {
        self.leaves().count()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut order: Vec<Vertex> = self.vertices().collect();
        order.sort_by_key(|&v| (self.degree(v), v));
        DegreeSequence {
            degrees: order.iter().map(|&v| self.degree(v)).collect(),
            order,
        }
    }

    /// `f(G) = n + 3m + n₁`, the induction measure used by the reduction rules.
    pub fn potential(&self) -> usize {
        self.n() + 3 * self.m() + self.leaf_count()
    }

    pub fn delete_vertices(&self, xs: &BTreeSet<Vertex>) -> Result<Graph> {
        if let Some(&bad) = xs.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(bad));
        }
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !xs.contains(v))
            .map(|(&v, s)| (v, s.iter().copied().filter(|u| !xs.contains(u)).collect()))
            .collect();
        Ok(Graph { adj })
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph> {
        self.delete_vertices(&BTreeSet::from([v]))
    }

    pub fn delete_edges(&self, es: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in es {
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(u.min(v), u.max(v)));
            }
            g.adj.get_mut(&u).unwrap().remove(&v);
            g.adj.get_mut(&v).unwrap().remove(&u);
        }
        Ok(g)
    }

    pub fn add_edges(&self, es: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in es {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the new vertices `vs`, then the edges `es`.
    pub fn extended(&self, vs: &[Vertex], es: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = self.clone();
        for &v in vs {
            g.insert_vertex(v)?;
        }
        for &(u, v) in es {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    /// Connected 2-regular graph.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.adj.values().all(|s| s.len() == 2) && self.is_connected()
    }

    /// BFS distances from a set of sources; unreachable vertices are absent.
    pub fn distances_from(&self, sources: impl IntoIterator<Item = Vertex>) -> HashMap<Vertex, usize> {
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        for s in sources {
            if dist.insert(s, 0).is_none() {
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for &w in self.neighbors(u) {
                dist.entry(w).or_insert_with(|| {
                    queue.push_back(w);
                    d + 1
                });
            }
        }
        dist
    }

    /// Checks symmetry, absence of self-loops and that every neighbor is a vertex.
    pub fn validate(&self) -> Result<()> {
        for (&u, s) in &self.adj {
            for &v in s {
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                match self.adj.get(&v) {
                    None => return Err(Error::UnknownVertex(v)),
                    Some(back) if !back.contains(&u) => return Err(Error::MissingEdge(v, u)),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Index-based copy for the solvers. Index `i` corresponds to the `i`-th
    /// smallest vertex id.
    pub fn dense(&self) -> DenseGraph {
        let ids: Vec<Vertex> = self.vertices().collect();
        let index: HashMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|v| self.adj[v].iter().map(|u| index[u]).collect())
            .collect();
        DenseGraph { ids, index, adj }
    }

    /// Copy with ids replaced by `0..n` in increasing id order.
    pub fn relabeled(&self) -> Graph {
        let d = self.dense();
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| (d.index[&u] as Vertex, d.index[&v] as Vertex))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("relabeling preserves simplicity")
    }

    /// Edge-list text: header `n m`, then one `u v` line per edge with `u < v`.
    /// Ids are compacted to `0..n` in increasing order.
    pub fn to_edge_list(&self) -> String {
        let g = self.relabeled();
        let mut out = format!("{} {}\n", g.n(), g.m());
        for (u, v) in g.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let (n, m) = parse_pair(header).ok_or_else(|| err(hline, "malformed header, expected `n m`"))?;
        let n = usize::try_from(n).map_err(|_| err(hline, "vertex count too large"))?;
        let mut g = Graph::empty(n);
        let mut count = 0u64;
        for (line, l) in lines {
            let (u, v) = parse_pair(l).ok_or_else(|| err(line, "malformed edge, expected `u v`"))?;
            if u >= n as u64 || v >= n as u64 {
                return Err(err(line, &format!("vertex id out of range 0..{n}")));
            }
            match g.insert_edge(u as Vertex, v as Vertex) {
                Ok(()) => {}
                Err(Error::SelfLoop(x)) => return Err(err(line, &format!("self-loop at {x}"))),
                Err(Error::EdgeExists(a, b)) => return Err(err(line, &format!("duplicate edge {a} {b}"))),
                Err(e) => return Err(err(line, &e.to_string())),
            }
            count += 1;
        }
        if count != m {
            return Err(err(hline, &format!("header declares {m} edges, found {count}")));
        }
        Ok(g)
    }

    /// Graphviz rendering; original ids are kept.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: &str) -> Option<(u64, u64)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Contiguous-index adjacency used by the exact solvers.
#[derive(Debug, Clone)]
pub struct DenseGraph {
    pub ids: Vec<Vertex>,
    pub index: HashMap<Vertex, usize>,
    pub adj: Vec<Vec<usize>>,
}

impl DenseGraph {
    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn to_ids(&self, idx: impl IntoIterator<Item = usize>) -> BTreeSet<Vertex> {
        idx.into_iter().map(|i| self.ids[i]).collect()
    }
}

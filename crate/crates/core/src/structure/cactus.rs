//! Block decomposition of cacti.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, DenseGraph, Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block {
    Bridge(Edge),
    /// Vertices in cyclic order, starting at the smallest id and continuing
    /// towards its smaller cycle neighbor.
    Cycle(Vec<Vertex>),
}

impl Block {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Block::Bridge((u, v)) => vec![*u, *v],
            Block::Cycle(c) => c.clone(),
        }
    }
}

/// Block-cut tree: block nodes are indices into [`CactusDecomposition::blocks`],
/// cut nodes are vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCutTree {
    pub cut_vertices: Vec<Vertex>,
    /// `(block index, cut vertex)` incidences.
    pub links: Vec<(usize, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusDecomposition {
    pub blocks: Vec<Block>,
    pub cycle_blocks: Vec<Vec<Vertex>>,
    pub bridges: Vec<Edge>,
    pub block_cut_tree: BlockCutTree,
}

impl CactusDecomposition {
    /// Blocks containing each vertex.
    pub fn blocks_of(&self) -> BTreeMap<Vertex, Vec<usize>> {
        let mut out: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b.vertices() {
                out.entry(v).or_default().push(i);
            }
        }
        out
    }
}

/// Edge sets of the biconnected blocks, as dense index pairs.
pub(crate) fn biconnected_blocks(d: &DenseGraph) -> Vec<Vec<(usize, usize)>> {
    let n = d.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor position)
        let mut calls: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = calls.last_mut() {
            let (v, parent, pos) = *top;
            if pos < d.adj[v].len() {
                top.2 += 1;
                let w = d.adj[v][pos];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    calls.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                calls.pop();
                if let Some(&(u, _, _)) = calls.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

fn order_cycle(g: &Graph, members: &BTreeSet<Vertex>) -> Vec<Vertex> {
    let start = *members.first().expect("cycle block is nonempty");
    let next_in_block = |v: Vertex, prev: Option<Vertex>| {
        g.neighbors(v)
            .iter()
            .copied()
            .find(|u| members.contains(u) && Some(*u) != prev)
    };
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = next_in_block(cur, prev) {
        if next == start {
            break;
        }
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

/// Splits a connected graph into bridges and cycle blocks, failing when some
/// block is neither.
pub fn decompose_cactus(g: &Graph) -> Result<CactusDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let d = g.dense();
    let mut blocks = Vec::new();
    for raw in biconnected_blocks(&d) {
        if raw.len() == 1 {
            let (a, b) = raw[0];
            blocks.push(Block::Bridge(edge(d.ids[a], d.ids[b])));
            continue;
        }
        let members: BTreeSet<Vertex> = raw.iter().flat_map(|&(a, b)| [d.ids[a], d.ids[b]]).collect();
        if members.len() != raw.len() {
            return Err(Error::NotCactus);
        }
        let cycle = order_cycle(g, &members);
        debug_assert_eq!(cycle.len(), members.len(), "block with |E| = |V| is a chordless cycle");
        blocks.push(Block::Cycle(cycle));
    }
    blocks.sort_by(|a, b| match (a, b) {
        (Block::Cycle(x), Block::Cycle(y)) => x.cmp(y),
        (Block::Cycle(_), Block::Bridge(_)) => std::cmp::Ordering::Less,
        (Block::Bridge(_), Block::Cycle(_)) => std::cmp::Ordering::Greater,
        (Block::Bridge(x), Block::Bridge(y)) => x.cmp(y),
    });

    let mut cycle_blocks = Vec::new();
    let mut bridges = Vec::new();
    let mut membership: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, b) in blocks.iter().enumerate() {
        match b {
            Block::Bridge(e) => bridges.push(*e),
            Block::Cycle(c) => cycle_blocks.push(c.clone()),
        }
        for v in b.vertices() {
            membership.entry(v).or_default().push(i);
        }
    }
    let cut_vertices: Vec<Vertex> = membership
        .iter()
        .filter(|(_, bs)| bs.len() >= 2)
        .map(|(&v, _)| v)
        .collect();
    let links = cut_vertices
        .iter()
        .flat_map(|&v| membership[&v].iter().map(move |&b| (b, v)))
        .collect();

    Ok(CactusDecomposition {
        blocks,
        cycle_blocks,
        bridges,
        block_cut_tree: BlockCutTree { cut_vertices, links },
    })
}

/// Connected graph whose blocks are all single edges or chordless cycles.
pub fn is_cactus(g: &Graph) -> bool {
    decompose_cactus(g).is_ok()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut color: BTreeMap<Vertex, bool> = BTreeMap::new();
    for s in g.vertices() {
        if color.contains_key(&s) {
            continue;
        }
        color.insert(s, false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = color[&u];
            for &w in g.neighbors(u) {
                match color.get(&w) {
                    Some(&cw) if cw == cu => return false,
                    Some(_) => {}
                    None => {
                        color.insert(w, !cu);
                        stack.push(w);
                    }
                }
            }
        }
    }
    true
}

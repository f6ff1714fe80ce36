//! Exit vertices, outer cycles and suns on cactus cycles.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::cactus::{decompose_cactus, is_bipartite};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub cycle: Vec<Vertex>,
    pub exit_vertices: BTreeSet<Vertex>,
    pub is_outer: bool,
    /// Only ever true for outer cycles.
    pub has_sun: bool,
    pub length: usize,
}

fn same_cycle(a: &[Vertex], b: &[Vertex]) -> bool {
    a.len() == b.len() && a.iter().collect::<BTreeSet<_>>() == b.iter().collect::<BTreeSet<_>>()
}

fn exits_among(g: &Graph, cycle: &[Vertex], cycles: &[Vec<Vertex>]) -> Result<BTreeSet<Vertex>> {
    let mut exits = BTreeSet::new();
    for other in cycles.iter().filter(|c| !same_cycle(c, cycle)) {
        let dist = g.distances_from(other.iter().copied());
        let best = cycle.iter().map(|v| dist[v]).min().expect("cycle is nonempty");
        let closest: Vec<Vertex> = cycle.iter().copied().filter(|v| dist[v] == best).collect();
        if closest.len() != 1 {
            return Err(Error::Structure(format!(
                "cycles {cycle:?} and {other:?} have {} closest vertices",
                closest.len()
            )));
        }
        exits.insert(closest[0]);
    }
    Ok(exits)
}

/// Vertices of `cycle` closest to some other cycle of the cactus. Empty for
/// unicyclic graphs.
pub fn exit_vertices(g: &Graph, cycle: &[Vertex]) -> Result<BTreeSet<Vertex>> {
    let d = decompose_cactus(g)?;
    if !d.cycle_blocks.iter().any(|c| same_cycle(c, cycle)) {
        return Err(Error::Structure(format!("{cycle:?} is not a cycle block")));
    }
    exits_among(g, cycle, &d.cycle_blocks)
}

fn leaf_neighbors(g: &Graph, v: Vertex) -> usize {
    g.neighbors(v).iter().filter(|&&u| g.is_leaf(u)).count()
}

fn sun_at(g: &Graph, cycle: &[Vertex], exits: &BTreeSet<Vertex>) -> bool {
    let irregular = cycle
        .iter()
        .filter(|&&v| !exits.contains(&v) && leaf_neighbors(g, v) != 1)
        .count();
    if exits.is_empty() {
        // exit-free cycle: one vertex may play the exit's role
        irregular <= 1
    } else {
        irregular == 0
    }
}

/// Reports for every cycle block of a connected cactus; empty for trees.
pub fn cycle_reports(g: &Graph) -> Result<Vec<CycleReport>> {
    let d = decompose_cactus(g)?;
    d.cycle_blocks
        .iter()
        .map(|c| {
            let exits = exits_among(g, c, &d.cycle_blocks)?;
            let is_outer = exits.len() <= 1;
            Ok(CycleReport {
                has_sun: is_outer && sun_at(g, c, &exits),
                cycle: c.clone(),
                length: c.len(),
                is_outer,
                exit_vertices: exits,
            })
        })
        .collect()
}

/// The outer cycles (at most one exit vertex) of a connected cactus.
pub fn outer_cycles(g: &Graph) -> Result<Vec<CycleReport>> {
    Ok(cycle_reports(g)?.into_iter().filter(|r| r.is_outer).collect())
}

/// Whether every non-exit vertex of an outer cycle carries exactly one
/// pendant leaf. On an exit-free cycle one vertex is exempt.
pub fn has_sun(g: &Graph, report: &CycleReport) -> Result<bool> {
    if !report.is_outer {
        return Err(Error::Structure("suns are defined on outer cycles only".into()));
    }
    Ok(sun_at(g, &report.cycle, &report.exit_vertices))
}

/// Hypotheses of the sun-free bipartite cactus class on which `γ₂ ≤ a + 1`
/// is known to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunFreeHypotheses {
    pub connected: bool,
    pub bipartite: bool,
    pub cactus: bool,
    pub no_sun_at_outer: bool,
    pub outer_4cycle_exit_degree_ok: bool,
    pub all: bool,
}

/// The two cycle conditions are only meaningful on cacti and are reported
/// false otherwise.
pub fn sun_free_hypotheses(g: &Graph) -> SunFreeHypotheses {
    let connected = g.is_connected() && !g.is_empty();
    let bipartite = is_bipartite(g);
    let reports = if connected { cycle_reports(g).ok() } else { None };
    let cactus = reports.is_some();
    let (no_sun, exit_ok) = match &reports {
        None => (false, false),
        Some(rs) => {
            let outer: Vec<&CycleReport> = rs.iter().filter(|r| r.is_outer).collect();
            let no_sun = outer.iter().all(|r| !r.has_sun);
            // no exit vertex means the degree condition is vacuous
            let exit_ok = outer
                .iter()
                .filter(|r| r.length == 4)
                .flat_map(|r| r.exit_vertices.iter())
                .all(|&x| g.degree(x) >= 4);
            (no_sun, exit_ok)
        }
    };
    SunFreeHypotheses {
        connected,
        bipartite,
        cactus,
        no_sun_at_outer: no_sun,
        outer_4cycle_exit_degree_ok: exit_ok,
        all: connected && bipartite && cactus && no_sun && exit_ok,
    }
}

/// Every edge lies on a cycle (a bridgeless cactus).
pub fn all_edges_on_cycles(g: &Graph) -> bool {
    decompose_cactus(g).is_ok_and(|d| d.bridges.is_empty())
}

/// Map from vertex to the number of cycle blocks it lies on.
pub fn cycle_membership(g: &Graph) -> Result<BTreeMap<Vertex, usize>> {
    let d = decompose_cactus(g)?;
    let mut out = BTreeMap::new();
    for c in &d.cycle_blocks {
        for &v in c {
            *out.entry(v).or_insert(0) += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    /// Copies of `cycle(len)` chained by bridges between consecutive copies.
    fn chain_of_cycles(len: usize, count: usize) -> Graph {
        let mut edges = Vec::new();
        for c in 0..count {
            let base = (c * len) as Vertex;
            for i in 0..len as Vertex {
                edges.push(edge(base + i, base + (i + 1) % len as Vertex));
            }
            if c + 1 < count {
                // leave from the vertex opposite the entry
                edges.push((base + len as Vertex / 2, base + len as Vertex));
            }
        }
        Graph::from_edges(len * count, &edges).unwrap()
    }

    fn with_leaves(g: &Graph, at: &[Vertex]) -> Graph {
        let mut h = g.clone();
        for &v in at {
            let leaf = h.fresh_id();
            h.insert_vertex(leaf).unwrap();
            h.insert_edge(v, leaf).unwrap();
        }
        h
    }

    #[test]
    fn unicyclic_has_no_exits_and_is_outer() {
        let g = with_leaves(&Graph::cycle(5), &[0]);
        assert!(exit_vertices(&g, &[0, 1, 2, 3, 4]).unwrap().is_empty());
        let reports = cycle_reports(&g).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].is_outer);
    }

    #[test]
    fn bridge_endpoint_is_the_exit() {
        let g = chain_of_cycles(4, 2);
        assert_eq!(exit_vertices(&g, &[0, 1, 2, 3]).unwrap(), BTreeSet::from([2]));
        assert_eq!(exit_vertices(&g, &[4, 5, 6, 7]).unwrap(), BTreeSet::from([4]));
        assert!(exit_vertices(&g, &[0, 1, 2]).is_err());
    }

    #[test]
    fn middle_of_three_is_not_outer() {
        let g = chain_of_cycles(4, 3);
        let reports = cycle_reports(&g).unwrap();
        let middle = reports.iter().find(|r| r.cycle.contains(&4)).unwrap();
        assert!(!middle.is_outer);
        assert_eq!(middle.exit_vertices, BTreeSet::from([4, 6]));
        assert_eq!(reports.iter().filter(|r| r.is_outer).count(), 2);
        assert_eq!(outer_cycles(&g).unwrap().len(), 2);
    }

    #[test]
    fn sun_with_exit() {
        // C5 with leaves on 4 consecutive vertices, fifth vertex bridged to a C4
        let mut g = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8), (5, 8)])
            .unwrap();
        g = with_leaves(&g, &[0, 1, 2, 3]);
        let reports = cycle_reports(&g).unwrap();
        let c5 = reports.iter().find(|r| r.length == 5).unwrap();
        assert_eq!(c5.exit_vertices, BTreeSet::from([4]));
        assert!(c5.has_sun);
        assert!(has_sun(&g, c5).unwrap());
        let c4 = reports.iter().find(|r| r.length == 4).unwrap();
        assert!(!c4.has_sun);
    }

    #[test]
    fn exit_free_sun_convention() {
        let full = with_leaves(&Graph::cycle(4), &[0, 1, 2, 3]);
        assert!(cycle_reports(&full).unwrap()[0].has_sun);
        let three = with_leaves(&Graph::cycle(4), &[0, 1, 2]);
        assert!(cycle_reports(&three).unwrap()[0].has_sun);
        let two = with_leaves(&Graph::cycle(4), &[0, 1]);
        assert!(!cycle_reports(&two).unwrap()[0].has_sun);
        let doubled = with_leaves(&Graph::cycle(4), &[0, 0, 1, 2]);
        assert!(!cycle_reports(&doubled).unwrap()[0].has_sun);
    }

    #[test]
    fn sun_requires_outer_cycle() {
        let g = chain_of_cycles(4, 3);
        let reports = cycle_reports(&g).unwrap();
        let middle = reports.iter().find(|r| r.cycle.contains(&4)).unwrap();
        assert!(has_sun(&g, middle).is_err());
    }

    #[test]
    fn hypotheses() {
        assert!(sun_free_hypotheses(&Graph::cycle(6)).all);
        let two_c4 = chain_of_cycles(4, 2);
        let h = sun_free_hypotheses(&two_c4);
        assert!(h.connected && h.bipartite && h.cactus && h.no_sun_at_outer);
        assert!(!h.outer_4cycle_exit_degree_ok);
        assert!(!h.all);
        let k4 = sun_free_hypotheses(&Graph::complete(4));
        assert!(!k4.cactus && !k4.bipartite && !k4.all);
        assert!(sun_free_hypotheses(&Graph::path(5)).all);
    }

    #[test]
    fn bridgeless_detection() {
        assert!(all_edges_on_cycles(&Graph::cycle(6)));
        assert!(!all_edges_on_cycles(&chain_of_cycles(4, 2)));
        assert!(!all_edges_on_cycles(&Graph::complete(4)));
    }
}

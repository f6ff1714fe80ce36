//! Random instances on which a given reduction rule fires under the
//! engine's gates, for exercising the rule verification suite.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::reductions::{try_engine_rule, Reduction, Rule};
use crate::structure::{decompose_cactus, vertices_on_cycles};

use super::generators::*;

/// Adds a path of `len` new vertices hanging from `at`; returns the new ids.
fn hang_path(g: &Graph, at: Vertex, len: usize) -> Result<(Graph, Vec<Vertex>)> {
    let mut next = g.fresh_id();
    let mut prev = at;
    let mut added = Vec::with_capacity(len);
    let mut edges = Vec::with_capacity(len);
    for _ in 0..len {
        edges.push((prev, next));
        added.push(next);
        prev = next;
        next += 1;
    }
    Ok((g.extended(&added, &edges)?, added))
}

/// A cactus whose degree-2 cycle vertices each get a pendant leaf, which
/// pushes `d*` to 3 in most cases.
fn covered_cactus(n0: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut g = random_cactus_with(n0, 0.8, rng)?;
    let low: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    for v in low {
        g = hang_path(&g, v, 1)?.0;
    }
    Ok(g)
}

fn candidate(rule: Rule, n_max: usize, rng: &mut impl Rng) -> Result<Option<Graph>> {
    let g = match rule {
        Rule::StrongSupport | Rule::CycleEdge | Rule::TreeTrim | Rule::CycleTrim => {
            let n = rng.gen_range(4..=n_max);
            match rng.gen_range(0..3) {
                0 => random_tree_with(n, rng)?,
                1 => random_cactus_with(n, 0.5, rng)?,
                _ => random_connected_graph_with(n, 0.15, rng)?,
            }
        }
        Rule::InducedPath => {
            if n_max < 9 {
                return Ok(None);
            }
            let base = random_min_degree3_with(rng.gen_range(5..=(n_max - 3).min(12)), rng)?;
            let pairs: Vec<(Vertex, Vertex)> = base
                .vertices()
                .flat_map(|u| base.vertices().filter(move |&v| u < v).map(move |v| (u, v)))
                .filter(|&(u, v)| !base.has_edge(u, v))
                .collect();
            let Some(&(v, w)) = pairs.choose(rng) else {
                return Ok(None);
            };
            let (h, added) = hang_path(&base, v, 3)?;
            h.add_edges(&[(added[2], w)])?
        }
        Rule::PendantPath => {
            if n_max < 8 {
                return Ok(None);
            }
            let base = random_min_degree3_with(rng.gen_range(5..=(n_max - 3).min(12)), rng)?;
            let v = base.vertices().choose(rng).expect("nonempty");
            hang_path(&base, v, 3)?.0
        }
        Rule::DeepTree => {
            let base = covered_cactus(rng.gen_range(3..=6), rng)?;
            let Ok(d) = decompose_cactus(&base) else {
                return Ok(None);
            };
            let Some(cycle) = d.cycle_blocks.choose(rng) else {
                return Ok(None);
            };
            let root = *cycle.choose(rng).expect("cycles are nonempty");
            let (mut h, added) = hang_path(&base, root, rng.gen_range(3..=4))?;
            // optional extra children along the path
            for &x in &added[..added.len() - 2] {
                if rng.gen_bool(0.4) {
                    h = hang_path(&h, x, rng.gen_range(1..=2))?.0;
                }
            }
            h
        }
        Rule::SubdividedStar => {
            let base = random_cactus_with(rng.gen_range(3..=(n_max.saturating_sub(5)).max(3)), 0.7, rng)?;
            let on_cycles = vertices_on_cycles(&base);
            let centers: Vec<Vertex> = base.vertices().filter(|&v| base.degree(v) == 2 && on_cycles.contains(&v)).collect();
            let Some(&c) = centers.choose(rng) else {
                return Ok(None);
            };
            let mut h = base;
            for _ in 0..rng.gen_range(2..=3) {
                h = hang_path(&h, c, 2)?.0;
            }
            for _ in 0..rng.gen_range(0..=2) {
                h = hang_path(&h, c, 1)?.0;
            }
            h
        }
    };
    Ok((g.n() <= n_max).then_some(g))
}

/// A random connected graph on at most `n_max` vertices on which the engine
/// accepts `rule` (ignoring higher-priority rules), with that reduction.
pub fn rule_instance(rule: Rule, n_max: usize, rng: &mut impl Rng) -> Result<(Graph, Reduction)> {
    for _ in 0..REJECTION_LIMIT {
        if let Some(g) = candidate(rule, n_max, rng)? {
            if let Some(r) = try_engine_rule(&g, rule) {
                return Ok((g, r));
            }
        }
    }
    Err(Error::Generation { attempts: REJECTION_LIMIT, accepted: 0 })
}

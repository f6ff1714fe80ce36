//! Seeded random instance generators. All randomness comes from ChaCha8, so
//! a given seed produces the same graph on every platform and toolchain.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::structure::{all_edges_on_cycles, is_bipartite, sun_free_hypotheses};

/// Attempts per instance before a constrained generator gives up.
pub const REJECTION_LIMIT: usize = 10_000;

/// Longest cycle the cactus generators attach.
const MAX_CYCLE: usize = 8;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree on `0..n`, decoded from a random Prüfer
/// sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut rng_from_seed(seed))
}

pub fn random_tree_with(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("a tree needs at least one vertex".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, if n == 2 { &[(0, 1)] } else { &[] });
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf as Vertex, x as Vertex));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0] as Vertex, last[1] as Vertex));
    Graph::from_edges(n, &edges)
}

/// Grows a cactus from a single vertex: each round picks a random vertex and
/// attaches either a pendant vertex or, with probability `cycle_bias`, a
/// cycle through it.
pub fn random_cactus(n: usize, cycle_bias: f64, seed: u64) -> Result<Graph> {
    random_cactus_with(n, cycle_bias, &mut rng_from_seed(seed))
}

pub fn random_cactus_with(n: usize, cycle_bias: f64, rng: &mut impl Rng) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("a cactus needs at least two vertices".into()));
    }
    if !(0.0..=1.0).contains(&cycle_bias) {
        return Err(Error::InvalidParams(format!("cycle bias {cycle_bias} is not a probability")));
    }
    let mut grower = Grower::new();
    while grower.n < n {
        let room = n - grower.n;
        if room >= 2 && rng.gen_bool(cycle_bias) {
            let len = rng.gen_range(3..=(room + 1).min(MAX_CYCLE));
            grower.attach_cycle(rng, len);
        } else {
            grower.attach_pendant(rng);
        }
    }
    grower.finish()
}

/// Extra conditions on random bipartite cacti.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CactusConstraint {
    #[default]
    None,
    /// Sun-free: no sun at an outer cycle, and exit vertices of outer
    /// 4-cycles have degree at least 4.
    SunFree,
    /// Every edge lies on a cycle.
    CyclesOnly,
}

/// Random bipartite cactus (all cycles even). `SunFree` is produced by
/// rejection sampling with at most [`REJECTION_LIMIT`] attempts;
/// `CyclesOnly` attaches cycles only and needs `n − 1` to be a sum of odd
/// numbers of at least 3 (so `n = 4` or `n ≥ 6`).
pub fn random_bipartite_cactus(n: usize, seed: u64, constraint: CactusConstraint) -> Result<Graph> {
    random_bipartite_cactus_with(n, constraint, &mut rng_from_seed(seed))
}

pub fn random_bipartite_cactus_with(n: usize, constraint: CactusConstraint, rng: &mut impl Rng) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("a cactus needs at least two vertices".into()));
    }
    match constraint {
        CactusConstraint::None => bipartite_cactus(n, 0.5, rng),
        CactusConstraint::CyclesOnly => {
            if n < 4 || n == 5 {
                return Err(Error::InvalidParams(format!("no bridgeless bipartite cactus has {n} vertices")));
            }
            let g = cycles_only(n, rng)?;
            debug_assert!(all_edges_on_cycles(&g) && is_bipartite(&g));
            Ok(g)
        }
        CactusConstraint::SunFree => {
            for _ in 0..REJECTION_LIMIT {
                let bias = rng.gen_range(0.2..0.8);
                let g = bipartite_cactus(n, bias, rng)?;
                if sun_free_hypotheses(&g).all {
                    return Ok(g);
                }
            }
            Err(Error::Generation { attempts: REJECTION_LIMIT, accepted: 0 })
        }
    }
}

fn bipartite_cactus(n: usize, cycle_bias: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut grower = Grower::new();
    while grower.n < n {
        let room = n - grower.n;
        let lens: Vec<usize> = [4, 6, 8].into_iter().filter(|&l| l - 1 <= room).collect();
        if !lens.is_empty() && rng.gen_bool(cycle_bias) {
            let len = *lens.choose(rng).expect("nonempty");
            grower.attach_cycle(rng, len);
        } else {
            grower.attach_pendant(rng);
        }
    }
    grower.finish()
}

fn cycles_only(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut grower = Grower::new();
    while grower.n < n {
        let room = n - grower.n;
        // keep the remainder expressible as a sum of odd parts of size >= 3
        let lens: Vec<usize> = [4, 6, 8]
            .into_iter()
            .filter(|&l| {
                let rest = room as isize - (l as isize - 1);
                rest == 0 || rest == 3 || rest >= 5
            })
            .collect();
        let len = *lens.choose(rng).expect("feasible n always leaves a choice");
        grower.attach_cycle(rng, len);
    }
    grower.finish()
}

struct Grower {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Grower {
    fn new() -> Self {
        Self { n: 1, edges: Vec::new() }
    }

    fn anchor(&self, rng: &mut impl Rng) -> Vertex {
        rng.gen_range(0..self.n) as Vertex
    }

    fn attach_pendant(&mut self, rng: &mut impl Rng) {
        let v = self.anchor(rng);
        self.edges.push((v, self.n as Vertex));
        self.n += 1;
    }

    /// A cycle of length `len` through an existing vertex, adding `len − 1`
    /// new vertices.
    fn attach_cycle(&mut self, rng: &mut impl Rng, len: usize) {
        let v = self.anchor(rng);
        let mut prev = v;
        for _ in 1..len {
            let x = self.n as Vertex;
            self.edges.push((prev, x));
            prev = x;
            self.n += 1;
        }
        self.edges.push((prev, v));
    }

    fn finish(self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_connected_graph_with(n, p, &mut rng_from_seed(seed))
}

pub fn random_connected_graph_with(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} is not a probability")));
    }
    let tree = random_tree_with(n, rng)?;
    let mut extra = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                extra.push((u, v));
            }
        }
    }
    tree.add_edges(&extra)
}

/// Random connected graph with minimum degree at least 3: a random spanning
/// tree, then random edges at deficient vertices until none remain.
pub fn random_min_degree3(n: usize, seed: u64) -> Result<Graph> {
    random_min_degree3_with(n, &mut rng_from_seed(seed))
}

pub fn random_min_degree3_with(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParams("minimum degree 3 needs at least four vertices".into()));
    }
    let tree = random_tree_with(n, rng)?;
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (u, v) in tree.edges() {
        adj[u as usize][v as usize] = true;
        adj[v as usize][u as usize] = true;
    }
    let degree = |adj: &Vec<Vec<bool>>, v: usize| adj[v].iter().filter(|&&b| b).count();
    while let Some(v) = (0..n).find(|&v| degree(&adj, v) < 3) {
        let options: Vec<usize> = (0..n).filter(|&u| u != v && !adj[v][u]).collect();
        // prefer partners that are deficient too, so degrees stay small
        let needy: Vec<usize> = options.iter().copied().filter(|&u| degree(&adj, u) < 3).collect();
        let pool = if needy.is_empty() { &options } else { &needy };
        let u = *pool.choose(rng).expect("n >= 4 leaves a non-neighbor for a deficient vertex");
        adj[v][u] = true;
        adj[u][v] = true;
    }
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .map(|(u, v)| (u as Vertex, v as Vertex))
        .collect();
    Graph::from_edges(n, &edges)
}

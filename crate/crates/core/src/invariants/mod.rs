//! Exact `a(G)`, `d*(G)` and `γ₂(G)`.
//!
//! Three independent `γ₂` backends are provided so that each can be checked
//! against the others: exhaustive search ([`gamma2_bruteforce`]), a general
//! branch and bound ([`gamma2_branch_and_bound`]) and a linear-time dynamic
//! program for cacti ([`gamma2_cactus`]).

mod branch_bound;
mod bruteforce;
mod cactus_dp;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::structure::is_cactus;

pub use branch_bound::{gamma2_branch_and_bound, gamma2_branch_and_bound_with_budget, DEFAULT_NODE_BUDGET};
pub use bruteforce::{gamma2_bruteforce, BRUTE_FORCE_CAP};
pub use cactus_dp::gamma2_cactus;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilationCertificate {
    pub a: usize,
    /// First `a` vertices in (degree, id) order.
    pub canonical_set: BTreeSet<Vertex>,
    /// `Σ(S, G)` for the canonical set.
    pub degree_sum: usize,
    /// Minimum degree outside the canonical set; `None` when the set is all of `V(G)`.
    pub d_star: Option<usize>,
}

/// Largest `k` such that the `k` smallest degrees sum to at most `m(G)`.
pub fn annihilation(g: &Graph) -> AnnihilationCertificate {
    let m = g.m();
    let seq = g.degree_sequence();
    let mut sum = 0;
    let mut a = 0;
    for &d in &seq.degrees {
        if sum + d > m {
            break;
        }
        sum += d;
        a += 1;
    }
    AnnihilationCertificate {
        a,
        canonical_set: seq.order[..a].iter().copied().collect(),
        degree_sum: sum,
        d_star: seq.degrees.get(a).copied(),
    }
}

/// Every vertex outside `s` has at least two neighbors in `s`.
pub fn is_2_dominating(g: &Graph, s: &BTreeSet<Vertex>) -> Result<bool> {
    if let Some(&bad) = s.iter().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownVertex(bad));
    }
    Ok(g
        .vertices()
        .filter(|v| !s.contains(v))
        .all(|v| g.neighbors(v).iter().filter(|u| s.contains(u)).count() >= 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Bruteforce,
    BranchAndBound,
    CactusDp,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Bruteforce => "bruteforce",
            Backend::BranchAndBound => "branch_and_bound",
            Backend::CactusDp => "cactus_dp",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub gamma2: usize,
    pub witness: BTreeSet<Vertex>,
    pub backend: Backend,
}

/// Picks the cactus DP when applicable, brute force up to its cap, and branch
/// and bound otherwise.
pub fn gamma2(g: &Graph) -> Result<DominationCertificate> {
    gamma2_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn gamma2_with_budget(g: &Graph, budget: u64) -> Result<DominationCertificate> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if is_cactus(g) {
        gamma2_cactus(g)
    } else if g.n() <= BRUTE_FORCE_CAP {
        gamma2_bruteforce(g)
    } else {
        gamma2_branch_and_bound_with_budget(g, budget)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub gamma2: usize,
    pub a: usize,
    pub gap: i64,
    pub holds: bool,
}

impl ConjectureRecord {
    pub fn new(gamma2: usize, a: usize) -> Self {
        let gap = gamma2 as i64 - a as i64;
        Self {
            gamma2,
            a,
            gap,
            holds: gap <= 1,
        }
    }
}

/// Evaluates `γ₂(G) ≤ a(G) + 1` on a connected graph with at least two vertices.
pub fn conjecture_check(g: &Graph) -> Result<ConjectureRecord> {
    conjecture_check_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn conjecture_check_with_budget(g: &Graph, budget: u64) -> Result<ConjectureRecord> {
    if g.n() < 2 {
        return Err(Error::InvalidParams("conjecture needs at least 2 vertices".into()));
    }
    let dom = gamma2_with_budget(g, budget)?;
    Ok(ConjectureRecord::new(dom.gamma2, annihilation(g).a))
}

/// Dense bitmask view shared by the exhaustive solvers (`n ≤ 64`).
pub(crate) struct Masks {
    pub nbr: Vec<u64>,
    pub leaves: u64,
}

impl Masks {
    pub fn new(d: &crate::graph::DenseGraph) -> Self {
        assert!(d.n() <= 64);
        let nbr: Vec<u64> = d
            .adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &j| m | 1 << j))
            .collect();
        let leaves = nbr
            .iter()
            .enumerate()
            .filter(|(_, m)| m.count_ones() == 1)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        Self { nbr, leaves }
    }

    pub fn dominates(&self, set: u64) -> bool {
        let n = self.nbr.len();
        (0..n).all(|i| set >> i & 1 == 1 || (self.nbr[i] & set).count_ones() >= 2)
    }
}

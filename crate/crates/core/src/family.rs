//! The cactus family `G(t; k₁, …, kₜ)`: cycles `C_{3kᵢ+1}` joined to a hub,
//! with a pendant leaf on every remaining degree-2 vertex.
//!
//! Vertex layout: cycle `i` occupies a consecutive id range starting at
//! `Σ_{j<i}(3kⱼ+1)`, listed in cyclic order; its first vertex is joined to the
//! hub. The hub follows the cycles, and the pendant leaves come last, in the
//! order of the cycle vertices they hang from.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::{annihilation, gamma2_cactus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub ks: Vec<usize>,
}

impl FamilyParams {
    pub fn new(t: usize, ks: Vec<usize>) -> Result<Self> {
        if t < 4 {
            return Err(Error::InvalidParams(format!("t must be at least 4, got {t}")));
        }
        if ks.len() != t {
            return Err(Error::InvalidParams(format!("expected {t} cycle parameters, got {}", ks.len())));
        }
        if ks.contains(&0) {
            return Err(Error::InvalidParams("every k must be at least 1".into()));
        }
        Ok(Self { ks })
    }

    /// `t` copies of `k = 1`.
    pub fn uniform(t: usize) -> Result<Self> {
        Self::new(t, vec![1; t])
    }

    pub fn t(&self) -> usize {
        self.ks.len()
    }

    fn k_sum(&self) -> usize {
        self.ks.iter().sum()
    }

    /// Total number of cycle vertices, `Σ(3kᵢ+1)`.
    pub fn cycle_vertices(&self) -> usize {
        self.ks.iter().map(|k| 3 * k + 1).sum()
    }

    pub fn n(&self) -> usize {
        self.cycle_vertices() + 1 + 3 * self.k_sum()
    }

    pub fn m(&self) -> usize {
        2 * self.cycle_vertices()
    }

    pub fn hub(&self) -> Vertex {
        self.cycle_vertices() as Vertex
    }

    pub fn closed_a(&self) -> usize {
        4 * self.k_sum() + 2 * self.t() / 3
    }

    pub fn closed_gamma2(&self) -> usize {
        4 * self.k_sum() + self.t()
    }

    pub fn closed_gap(&self) -> usize {
        self.t().div_ceil(3)
    }

    pub fn generate(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.m());
        let hub = self.hub();
        let mut next_leaf = hub + 1;
        let mut base: Vertex = 0;
        for &k in &self.ks {
            let len = (3 * k + 1) as Vertex;
            for i in 0..len {
                edges.push((base + i, base + (i + 1) % len));
            }
            edges.push((base, hub));
            for i in 1..len {
                edges.push((base + i, next_leaf));
                next_leaf += 1;
            }
            base += len;
        }
        Graph::from_edges(self.n(), &edges).expect("family construction is simple")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({};", self.t())?;
        for (i, k) in self.ks.iter().enumerate() {
            write!(f, "{}{k}", if i == 0 { "" } else { "," })?;
        }
        f.write_str(")")
    }
}

/// Parses `t:k1,k2,…` (for example `4:1,2,3,4`).
impl FromStr for FamilyParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("expected `t:k1,...,kt`, got `{s}`"));
        let (t, ks) = s.split_once(':').ok_or_else(bad)?;
        let t: usize = t.trim().parse().map_err(|_| bad())?;
        let ks = ks
            .split(',')
            .map(|k| k.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<usize>>>()?;
        Self::new(t, ks)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapWitness {
    pub c0: usize,
    pub params: FamilyParams,
    pub gap: usize,
    /// Closed-form gap exceeds `c0 + 1` and the computed `a` and `γ₂` of the
    /// generated graph agree with the closed forms.
    pub verified: bool,
}

/// Smallest all-ones family member whose gap is guaranteed to exceed `c0 + 1`,
/// namely `t = 3(c0 + 1) + 1`.
pub fn gap_witness(c0: usize) -> Result<GapWitness> {
    if c0 == 0 {
        return Err(Error::InvalidParams("c0 must be positive".into()));
    }
    let params = FamilyParams::uniform(3 * (c0 + 1) + 1)?;
    let gap = params.closed_gap();
    let g = params.generate();
    let a = annihilation(&g).a;
    let gamma2 = gamma2_cactus(&g)?.gamma2;
    let verified = gap > c0 + 1 && a == params.closed_a() && gamma2 == params.closed_gamma2();
    Ok(GapWitness { c0, params, gap, verified })
}

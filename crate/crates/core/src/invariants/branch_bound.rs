use crate::error::{Error, Result};
use crate::graph::{DenseGraph, Graph};

use super::{Backend, DominationCertificate};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    status: Vec<Status>,
    /// In-neighbors per vertex.
    cover: Vec<usize>,
    /// Open neighbors per vertex.
    open: Vec<usize>,
    chosen: usize,
    best: usize,
    best_set: Vec<bool>,
    max_gain: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn set(&mut self, v: usize, s: Status) {
        self.status[v] = s;
        if s == Status::In {
            self.chosen += 1;
        }
        for &u in &self.adj[v] {
            self.open[u] -= 1;
            if s == Status::In {
                self.cover[u] += 1;
            }
        }
    }

    fn unset(&mut self, v: usize) {
        let s = self.status[v];
        self.status[v] = Status::Open;
        if s == Status::In {
            self.chosen -= 1;
        }
        for &u in &self.adj[v] {
            self.open[u] += 1;
            if s == Status::In {
                self.cover[u] -= 1;
            }
        }
    }

    fn deficit(&self, v: usize) -> usize {
        if self.status[v] == Status::In {
            0
        } else {
            2usize.saturating_sub(self.cover[v])
        }
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { budget: self.budget });
        }
        let n = self.adj.len();
        let total: usize = (0..n).map(|v| self.deficit(v)).sum();
        // each new member removes at most its own deficit plus one unit per neighbor
        let lower = self.chosen + total.div_ceil(self.max_gain);
        if lower >= self.best {
            return Ok(());
        }
        if total == 0 {
            self.best = self.chosen;
            self.best_set = self.status.iter().map(|&s| s == Status::In).collect();
            return Ok(());
        }

        let mut pick: Option<(usize, usize)> = None;
        for v in 0..n {
            let need = self.deficit(v);
            if need == 0 {
                continue;
            }
            let score = match self.status[v] {
                Status::Out if self.open[v] < need => return Ok(()),
                Status::Out => self.open[v],
                _ => self.open[v] + 1,
            };
            if pick.is_none_or(|(_, s)| score < s) {
                pick = Some((v, score));
            }
        }
        let (v, _) = pick.expect("positive deficit implies an unsatisfied vertex");

        let branch = if self.status[v] == Status::Out {
            self.adj[v]
                .iter()
                .copied()
                .filter(|&u| self.status[u] == Status::Open)
                .max_by_key(|&u| (self.open[u], std::cmp::Reverse(u)))
                .expect("open neighbor exists when open >= need > 0")
        } else {
            v
        };
        for s in [Status::In, Status::Out] {
            self.set(branch, s);
            let r = self.run();
            self.unset(branch);
            r?;
        }
        Ok(())
    }
}

/// Leaves plus greedy additions, then redundant members removed.
fn greedy(d: &DenseGraph) -> Vec<bool> {
    let n = d.n();
    let mut in_set: Vec<bool> = d.adj.iter().map(|a| a.len() <= 1).collect();
    let mut cover = vec![0usize; n];
    for v in 0..n {
        if in_set[v] {
            for &u in &d.adj[v] {
                cover[u] += 1;
            }
        }
    }
    let deficit = |v: usize, in_set: &[bool], cover: &[usize]| {
        if in_set[v] {
            0
        } else {
            2usize.saturating_sub(cover[v])
        }
    };
    loop {
        let best = (0..n)
            .filter(|&v| !in_set[v])
            .map(|v| {
                let gain = deficit(v, &in_set, &cover)
                    + d.adj[v].iter().filter(|&&u| deficit(u, &in_set, &cover) > 0).count();
                (gain, std::cmp::Reverse(v))
            })
            .max();
        match best {
            Some((gain, std::cmp::Reverse(v))) if gain > 0 => {
                in_set[v] = true;
                for &u in &d.adj[v] {
                    cover[u] += 1;
                }
            }
            _ => break,
        }
    }
    for v in (0..n).rev() {
        if !in_set[v] || d.adj[v].len() <= 1 {
            continue;
        }
        // v can leave if it is itself 2-dominated and no out-neighbor drops below 2
        let ok = cover[v] >= 2 && d.adj[v].iter().all(|&u| in_set[u] || cover[u] >= 3);
        if ok {
            in_set[v] = false;
            for &u in &d.adj[v] {
                cover[u] -= 1;
            }
        }
    }
    in_set
}

pub fn gamma2_branch_and_bound(g: &Graph) -> Result<DominationCertificate> {
    gamma2_branch_and_bound_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Exact `γ₂` by branch and bound. Fails with [`Error::Budget`] after
/// `budget` search nodes.
pub fn gamma2_branch_and_bound_with_budget(g: &Graph, budget: u64) -> Result<DominationCertificate> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let d = g.dense();
    let n = d.n();
    let incumbent = greedy(&d);
    let mut search = Search {
        adj: &d.adj,
        status: vec![Status::Open; n],
        cover: vec![0; n],
        open: d.adj.iter().map(Vec::len).collect(),
        chosen: 0,
        best: incumbent.iter().filter(|&&b| b).count(),
        best_set: incumbent,
        max_gain: g.max_degree().unwrap_or(0) + 2,
        nodes: 0,
        budget,
    };
    for v in 0..n {
        if d.adj[v].len() <= 1 {
            search.set(v, Status::In);
        }
    }
    search.run()?;
    let witness = d.to_ids((0..n).filter(|&i| search.best_set[i]));
    Ok(DominationCertificate {
        gamma2: witness.len(),
        witness,
        backend: Backend::BranchAndBound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{gamma2_bruteforce, is_2_dominating};

    #[test]
    fn known_values() {
        assert_eq!(gamma2_branch_and_bound(&Graph::path(3)).unwrap().gamma2, 2);
        assert_eq!(gamma2_branch_and_bound(&Graph::cycle(6)).unwrap().gamma2, 3);
        assert_eq!(gamma2_branch_and_bound(&Graph::empty(1)).unwrap().gamma2, 1);
        assert_eq!(gamma2_branch_and_bound(&Graph::complete(2)).unwrap().gamma2, 2);
    }

    #[test]
    fn petersen_matches_bruteforce_and_bound() {
        let g = Graph::petersen();
        let bb = gamma2_branch_and_bound(&g).unwrap();
        assert_eq!(bb.gamma2, gamma2_bruteforce(&g).unwrap().gamma2);
        assert!(bb.gamma2 <= 10 / 2);
        assert!(is_2_dominating(&g, &bb.witness).unwrap());
    }

    #[test]
    fn greedy_is_feasible() {
        for g in [Graph::petersen(), Graph::cycle(9), Graph::star(4), Graph::complete(6)] {
            let d = g.dense();
            let set = d.to_ids((0..d.n()).filter(|&i| greedy(&d)[i]));
            assert!(is_2_dominating(&g, &set).unwrap());
        }
    }

    #[test]
    fn budget_error_is_distinct() {
        let err = gamma2_branch_and_bound_with_budget(&Graph::cycle(40), 0).unwrap_err();
        assert!(err.is_budget());
    }
}

//! Linear-time `γ₂` on cacti.
//!
//! The graph is rooted at its smallest vertex and every block hangs below the
//! vertex through which it is first reached. Each vertex carries a table over
//! four states: in the set, or outside with 0, 1 or at least 2 chosen
//! neighbors among its descendants. Bridges merge a child table directly;
//! a cycle is handled by a chain DP around its non-top vertices, conditioned
//! on whether the top vertex is chosen.
//!
//! A witness is recovered by self-reduction: vertices are pinned one at a
//! time to "out" whenever that keeps the optimum, otherwise to "in".

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{decompose_cactus, Block};

use super::{Backend, DominationCertificate};

const INF: usize = usize::MAX / 4;

const IN: usize = 0;
// OUT with c covered neighbors lives at index 1 + c, c ∈ {0, 1, 2+}
const fn out(c: usize) -> usize {
    1 + c
}

type Table = [usize; 4];
/// `[top chosen][number of chosen block neighbors of top]`
type BlockCost = [[usize; 3]; 2];

const MAY_IN: u8 = 1;
const MAY_OUT: u8 = 2;

enum Child {
    Bridge(usize),
    /// Cycle vertices after the top, in cyclic order.
    Cycle(Vec<usize>),
}

struct Rooted {
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
    children: Vec<Vec<Child>>,
}

fn add(a: usize, b: usize) -> usize {
    (a + b).min(INF)
}

fn root(g: &Graph) -> Result<Rooted> {
    let decomposition = decompose_cactus(g)?;
    let d = g.dense();
    let n = d.n();
    let blocks: Vec<Vec<usize>> = decomposition
        .blocks
        .iter()
        .map(|b| match b {
            Block::Bridge((u, v)) => vec![d.index[u], d.index[v]],
            Block::Cycle(c) => c.iter().map(|v| d.index[v]).collect(),
        })
        .collect();
    let mut blocks_of = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            blocks_of[v].push(i);
        }
    }

    let mut used = vec![false; blocks.len()];
    let mut children: Vec<Vec<Child>> = (0..n).map(|_| Vec::new()).collect();
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &b in &blocks_of[v] {
            if used[b] {
                continue;
            }
            used[b] = true;
            let members = &blocks[b];
            if members.len() == 2 {
                let w = if members[0] == v { members[1] } else { members[0] };
                queue.push_back(w);
                children[v].push(Child::Bridge(w));
            } else {
                let at = members.iter().position(|&x| x == v).expect("vertex lies on its block");
                let rest: Vec<usize> = members[at + 1..].iter().chain(&members[..at]).copied().collect();
                queue.extend(rest.iter().copied());
                children[v].push(Child::Cycle(rest));
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    Ok(Rooted { order, children })
}

fn bridge_cost(child: &Table) -> BlockCost {
    [
        [child[out(2)], child[IN], INF],
        [child[out(1)].min(child[out(2)]), child[IN], INF],
    ]
}

fn cycle_cost(tables: &[Table]) -> BlockCost {
    let k = tables.len();
    debug_assert!(k >= 2);
    let mut result = [[INF; 3]; 2];
    for top_in in 0..2 {
        // key: first chosen, current chosen, current coverage (when not chosen)
        let mut dp = [[[INF; 3]; 2]; 2];
        for s in 0..4 {
            let cost = tables[0][s];
            if cost >= INF {
                continue;
            }
            if s == IN {
                dp[1][1][0] = dp[1][1][0].min(cost);
            } else {
                let cov = (s - 1 + top_in).min(2);
                dp[0][0][cov] = dp[0][0][cov].min(cost);
            }
        }
        for table in &tables[1..] {
            let mut next = [[[INF; 3]; 2]; 2];
            for first in 0..2 {
                for cur in 0..2 {
                    for cov in 0..3 {
                        let base = dp[first][cur][cov];
                        if base >= INF {
                            continue;
                        }
                        for (s, &cost) in table.iter().enumerate() {
                            if cost >= INF {
                                continue;
                            }
                            let chosen = usize::from(s == IN);
                            if cur == 0 && cov + chosen < 2 {
                                continue;
                            }
                            let ncov = if chosen == 1 { 0 } else { (s - 1 + cur).min(2) };
                            let slot = &mut next[first][chosen][ncov];
                            *slot = (*slot).min(add(base, cost));
                        }
                    }
                }
            }
            dp = next;
        }
        for first in 0..2 {
            for last in 0..2 {
                for cov in 0..3 {
                    let cost = dp[first][last][cov];
                    if cost >= INF || (last == 0 && cov + top_in < 2) {
                        continue;
                    }
                    let slot = &mut result[top_in][first + last];
                    *slot = (*slot).min(cost);
                }
            }
        }
    }
    result
}

fn merge(table: &Table, block: &BlockCost) -> Table {
    let mut out_table = [INF; 4];
    out_table[IN] = add(table[IN], block[1].iter().copied().min().unwrap());
    for c in 0..3 {
        if table[out(c)] >= INF {
            continue;
        }
        for (extra, &cost) in block[0].iter().enumerate() {
            let slot = &mut out_table[out((c + extra).min(2))];
            *slot = (*slot).min(add(table[out(c)], cost));
        }
    }
    out_table
}

fn solve(rooted: &Rooted, allowed: &[u8]) -> usize {
    let n = allowed.len();
    let mut tables: Vec<Table> = vec![[INF; 4]; n];
    for &v in rooted.order.iter().rev() {
        let mut t = [INF; 4];
        if allowed[v] & MAY_IN != 0 {
            t[IN] = 1;
        }
        if allowed[v] & MAY_OUT != 0 {
            t[out(0)] = 0;
        }
        for child in &rooted.children[v] {
            let cost = match child {
                Child::Bridge(w) => bridge_cost(&tables[*w]),
                Child::Cycle(cycle) => {
                    let ts: Vec<Table> = cycle.iter().map(|&w| tables[w]).collect();
                    cycle_cost(&ts)
                }
            };
            t = merge(&t, &cost);
        }
        tables[v] = t;
    }
    let r = &tables[rooted.order[0]];
    r[IN].min(r[out(2)])
}

/// Exact `γ₂` for a connected cactus.
pub fn gamma2_cactus(g: &Graph) -> Result<DominationCertificate> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let rooted = root(g)?;
    let n = g.n();
    let mut allowed = vec![MAY_IN | MAY_OUT; n];
    let best = solve(&rooted, &allowed);
    for v in 0..n {
        allowed[v] = MAY_OUT;
        if solve(&rooted, &allowed) != best {
            allowed[v] = MAY_IN;
        }
    }
    let d = g.dense();
    let witness = d.to_ids((0..n).filter(|&i| allowed[i] == MAY_IN));
    debug_assert_eq!(witness.len(), best);
    Ok(DominationCertificate {
        gamma2: best,
        witness,
        backend: Backend::CactusDp,
    })
}

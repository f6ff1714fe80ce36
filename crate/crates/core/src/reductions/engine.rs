//! The reduction engine: fixed rule priority, per-rule standing assumptions,
//! and trace serialization.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::invariants::annihilation;
use crate::structure::{
    decompose_cactus, find_induced_p5_deg2, find_pendant_p4, find_strong_supports, find_subdivided_stars,
    hanging_trees, is_cactus,
};

use super::rules::*;
use super::{Reduction, ReductionStep, Rule, RuleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TerminalReason {
    BaseCaseK2,
    Tree,
    Cycle,
    NoRuleApplies,
}

impl TerminalReason {
    pub fn name(self) -> &'static str {
        match self {
            TerminalReason::BaseCaseK2 => "base_case_k2",
            TerminalReason::Tree => "tree",
            TerminalReason::Cycle => "cycle",
            TerminalReason::NoRuleApplies => "no_rule_applies",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Stop at the first tree or cycle instead of trimming it down to `K₂`.
    pub stop_at_base: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub initial: Graph,
    pub steps: Vec<ReductionStep>,
    pub terminal: Graph,
    pub terminal_reason: TerminalReason,
}

impl ReductionTrace {
    /// Replays every step from the initial graph and returns the intermediate
    /// graphs, first the initial one, last the terminal one.
    pub fn graphs(&self) -> Result<Vec<Graph>, Error> {
        let mut out = vec![self.initial.clone()];
        for step in &self.steps {
            let next = step.replay(out.last().expect("nonempty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// Steps compose and end at the recorded terminal graph.
    pub fn is_consistent(&self) -> bool {
        self.graphs().is_ok_and(|gs| gs.last() == Some(&self.terminal))
    }

    /// One line per step, then `terminal <reason> n=<n> m=<m>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let _ = writeln!(out, "{}", step.to_line());
        }
        let _ = writeln!(
            out,
            "terminal {} n={} m={}",
            self.terminal_reason.name(),
            self.terminal.n(),
            self.terminal.m()
        );
        out
    }
}

fn first_ok<T>(items: impl IntoIterator<Item = T>, apply: impl Fn(&T) -> Result<Reduction, RuleError>) -> Option<Reduction> {
    items.into_iter().find_map(|x| apply(&x).ok())
}

/// Graph-wide facts the rule gates depend on.
struct Context {
    tree: bool,
    cycle: bool,
    cactus: bool,
    d_star: Option<usize>,
}

impl Context {
    fn new(g: &Graph) -> Self {
        Self {
            tree: g.is_tree(),
            cycle: g.is_cycle(),
            cactus: is_cactus(g),
            d_star: annihilation(g).d_star,
        }
    }

    /// The standing assumption of the path and tree rules: the graph is
    /// neither a tree nor a cycle and `d* ≥ 3`.
    fn high_d_star(&self) -> bool {
        !self.tree && !self.cycle && self.d_star.is_some_and(|d| d >= 3)
    }
}

fn try_rule(g: &Graph, cx: &Context, rule: Rule) -> Option<Reduction> {
    match rule {
        Rule::StrongSupport => first_ok(find_strong_supports(g), |s| apply_strong_support(g, s.support)),
        Rule::CycleEdge => apply_cycle_edge(g).ok(),
        Rule::InducedPath if cx.high_d_star() => first_ok(find_induced_p5_deg2(g), |p| apply_induced_path(g, p)),
        Rule::PendantPath if cx.high_d_star() => first_ok(
            find_pendant_p4(g).into_iter().filter(|p| g.degree(p.attach) >= 3),
            |p| apply_pendant_path(g, p),
        ),
        Rule::DeepTree if cx.high_d_star() && cx.cactus => {
            let d = decompose_cactus(g).ok()?;
            let mut trees: Vec<_> = d
                .cycle_blocks
                .iter()
                .flat_map(|c| hanging_trees(g, c))
                .filter(|t| t.height >= 3)
                .collect();
            trees.sort_by_key(|t| (t.root, t.deepest));
            first_ok(trees, |t| apply_deep_tree(g, t))
        }
        Rule::SubdividedStar => first_ok(find_subdivided_stars(g), |s| apply_subdivided_star(g, s)),
        Rule::TreeTrim => tree_trim(g).ok(),
        Rule::CycleTrim => cycle_trim(g).ok(),
        Rule::InducedPath | Rule::PendantPath | Rule::DeepTree => None,
    }
}

/// The first rule, in priority order, that the engine would apply to `g`,
/// with its lexicographically first anchors.
pub fn applicable(g: &Graph) -> Option<Reduction> {
    let cx = Context::new(g);
    Rule::ALL.iter().find_map(|&r| try_rule(g, &cx, r))
}

/// Whether the engine would accept `rule` on `g`, ignoring higher-priority
/// rules. Returns the resulting reduction.
pub fn try_engine_rule(g: &Graph, rule: Rule) -> Option<Reduction> {
    try_rule(g, &Context::new(g), rule)
}

pub fn reduce_trace(g: &Graph) -> ReductionTrace {
    reduce_trace_with(g, ReduceOptions::default())
}

pub fn reduce_trace_with(g: &Graph, options: ReduceOptions) -> ReductionTrace {
    let mut current = g.clone();
    let mut steps = Vec::new();
    let reason = loop {
        if current.n() == 2 && current.m() == 1 {
            break TerminalReason::BaseCaseK2;
        }
        if options.stop_at_base && current.is_tree() {
            break TerminalReason::Tree;
        }
        if options.stop_at_base && current.is_cycle() {
            break TerminalReason::Cycle;
        }
        let Some(Reduction { step, graph }) = applicable(&current) else {
            break TerminalReason::NoRuleApplies;
        };
        if step.rule.decreases_potential() {
            assert!(step.f_after < step.f_before, "{} did not decrease f", step.rule);
        } else {
            assert!(graph.n() < current.n(), "{} did not shrink the graph", step.rule);
        }
        assert!(
            !is_cactus(&current) || is_cactus(&graph),
            "{} turned a cactus into a non-cactus",
            step.rule
        );
        steps.push(step);
        current = graph;
    };
    ReductionTrace {
        initial: g.clone(),
        steps,
        terminal: current,
        terminal_reason: reason,
    }
}

//! Exact checks of the counting inequalities behind each rule.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{annihilation, gamma2_with_budget, DEFAULT_NODE_BUDGET};

use super::ReductionStep;

/// Outcome of [`verify_step`]. A flag is `None` when it was not checked:
/// offset flags for rules without an offset, and γ₂-dependent flags when a
/// solver ran out of budget (then `partial` is set).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepVerification {
    pub gamma2_before: Option<usize>,
    pub gamma2_after: Option<usize>,
    pub a_before: usize,
    pub a_after: usize,
    /// `γ₂(G) ≤ γ₂(G′) + s`.
    pub gamma2_inequality_ok: Option<bool>,
    /// `a(G) ≥ a(G′) + s`.
    pub a_inequality_ok: Option<bool>,
    /// `γ₂(G′) ≤ a(G′) + 1 ⟹ γ₂(G) ≤ a(G) + 1`.
    pub end_implication_ok: Option<bool>,
    pub partial: bool,
}

impl StepVerification {
    /// Every checked flag holds and nothing was skipped for budget reasons.
    pub fn passed(&self) -> bool {
        !self.partial
            && [self.gamma2_inequality_ok, self.a_inequality_ok, self.end_implication_ok]
                .iter()
                .all(|f| f.unwrap_or(true))
    }
}

fn exact_gamma2(g: &Graph, budget: u64) -> Result<Option<usize>> {
    match gamma2_with_budget(g, budget) {
        Ok(c) => Ok(Some(c.gamma2)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Verifies `step`, which turned `g` into `g_prime`, with the default solver
/// budget.
pub fn verify_step(g: &Graph, step: &ReductionStep, g_prime: &Graph) -> Result<StepVerification> {
    verify_step_with_budget(g, step, g_prime, DEFAULT_NODE_BUDGET)
}

pub fn verify_step_with_budget(
    g: &Graph,
    step: &ReductionStep,
    g_prime: &Graph,
    budget: u64,
) -> Result<StepVerification> {
    let gamma2_before = exact_gamma2(g, budget)?;
    let gamma2_after = exact_gamma2(g_prime, budget)?;
    let a_before = annihilation(g).a;
    let a_after = annihilation(g_prime).a;
    let both = gamma2_before.zip(gamma2_after);
    let (gamma2_inequality_ok, a_inequality_ok) = match step.offset {
        Some(s) => (both.map(|(x, y)| x <= y + s), Some(a_before >= a_after + s)),
        None => (None, None),
    };
    let end_implication_ok = both.map(|(x, y)| y > a_after + 1 || x <= a_before + 1);
    Ok(StepVerification {
        gamma2_before,
        gamma2_after,
        a_before,
        a_after,
        gamma2_inequality_ok,
        a_inequality_ok,
        end_implication_ok,
        partial: both.is_none(),
    })
}

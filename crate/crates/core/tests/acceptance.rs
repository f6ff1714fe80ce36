//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodom_core::family::{gap_witness, FamilyParams};
use twodom_core::graph::Graph;
use twodom_core::harness::{
    random_cactus, random_connected_graph, random_min_degree3, random_tree, rng_from_seed, rule_instance, scan,
    GraphClass, ScanSpec,
};
use twodom_core::invariants::{
    annihilation, conjecture_check, gamma2, gamma2_branch_and_bound, gamma2_bruteforce, gamma2_cactus,
};
use twodom_core::reductions::{reduce_trace, verify_step, Rule, TerminalReason};
use twodom_core::structure::sun_free_hypotheses;

/// Outcome of one criterion: `Err` carries the first discrepancy found.
type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sporadic_counterexample() -> Outcome {
    let start = Instant::now();
    let g = FamilyParams::new(4, vec![1, 2, 3, 4]).map_err(|e| e.to_string())?.generate();
    let a = annihilation(&g).a;
    let g2 = gamma2_cactus(&g).map_err(|e| e.to_string())?.gamma2;
    let elapsed = start.elapsed();
    ensure((a, g2) == (42, 44), || format!("a = {a}, gamma2 = {g2}"))?;
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("a = 42, gamma2 = 44, gap = 2 in {elapsed:.1?}"))
}

/// The family member's computed values against its closed forms.
fn check_member(p: &FamilyParams) -> Result<(), String> {
    let g = p.generate();
    ensure((g.n(), g.m()) == (p.n(), p.m()), || format!("{p}: size {} {}", g.n(), g.m()))?;
    let a = annihilation(&g).a;
    let g2 = gamma2_cactus(&g).map_err(|e| e.to_string())?.gamma2;
    ensure(a == p.closed_a(), || format!("{p}: a = {a}, closed form {}", p.closed_a()))?;
    ensure(g2 == p.closed_gamma2(), || format!("{p}: gamma2 = {g2}, closed form {}", p.closed_gamma2()))?;
    ensure(g2 - a == p.closed_gap(), || format!("{p}: gap {} vs {}", g2 - a, p.closed_gap()))
}

fn random_family_params(rng: &mut impl Rng) -> FamilyParams {
    loop {
        let t = rng.gen_range(4..=16);
        let ks: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=6)).collect();
        if let Ok(p) = FamilyParams::new(t, ks) {
            if p.n() <= 200 {
                return p;
            }
        }
    }
}

fn family_members() -> Vec<FamilyParams> {
    let mut out: Vec<FamilyParams> = (4..=10).map(|t| FamilyParams::uniform(t).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    out.extend((0..50).map(|_| random_family_params(&mut rng)));
    out
}

fn family_closed_forms() -> Outcome {
    for t in 4..=10 {
        let p = FamilyParams::uniform(t).map_err(|e| e.to_string())?;
        ensure(p.closed_a() == 4 * t + 2 * t / 3, || format!("t = {t}: closed a"))?;
        ensure(p.closed_gamma2() == 5 * t, || format!("t = {t}: closed gamma2"))?;
        ensure(p.closed_gap() == t.div_ceil(3), || format!("t = {t}: closed gap"))?;
        check_member(&p)?;
    }
    let members = family_members();
    for p in &members[7..] {
        check_member(p)?;
    }
    Ok(format!("t = 4..10 uniform and {} random vectors match", members.len() - 7))
}

fn gap_witnesses() -> Outcome {
    for c0 in 1..=3 {
        let w = gap_witness(c0).map_err(|e| e.to_string())?;
        ensure(w.params.t() == 3 * (c0 + 1) + 1, || format!("c0 = {c0}: t = {}", w.params.t()))?;
        ensure(w.gap > c0 + 1, || format!("c0 = {c0}: gap {}", w.gap))?;
        ensure(w.verified, || format!("c0 = {c0}: witness not verified"))?;
        let g = w.params.generate();
        let computed = gamma2_cactus(&g).map_err(|e| e.to_string())?.gamma2 - annihilation(&g).a;
        ensure(computed == w.params.closed_gap(), || format!("c0 = {c0}: computed gap {computed}"))?;
    }
    Ok("c0 = 1, 2, 3 give t = 7, 10, 13".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(4);
    for i in 0..500u64 {
        let n = rng.gen_range(2..=18);
        let g = random_cactus(n, rng.gen_range(0.2..0.9), 1000 + i).map_err(|e| e.to_string())?;
        let dp = gamma2_cactus(&g).map_err(|e| e.to_string())?.gamma2;
        let bf = gamma2_bruteforce(&g).map_err(|e| e.to_string())?.gamma2;
        ensure(dp == bf, || format!("cactus {i}: dp {dp} vs brute force {bf}\n{}", g.to_edge_list()))?;
    }
    for i in 0..500u64 {
        let n = rng.gen_range(2..=14);
        let g = random_connected_graph(n, rng.gen_range(0.0..0.7), 2000 + i).map_err(|e| e.to_string())?;
        let bb = gamma2_branch_and_bound(&g).map_err(|e| e.to_string())?.gamma2;
        let bf = gamma2_bruteforce(&g).map_err(|e| e.to_string())?.gamma2;
        ensure(bb == bf, || format!("graph {i}: b&b {bb} vs brute force {bf}\n{}", g.to_edge_list()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("500 cacti and 500 graphs, zero mismatches in {elapsed:.1?}"))
}

fn proven_classes() -> Outcome {
    let runs = [
        (GraphClass::Tree, 2, 1000),
        (GraphClass::BipartiteCactusSunFree, 2, 500),
        (GraphClass::BipartiteCactusCyclesOnly, 4, 500),
    ];
    let mut parts = Vec::new();
    for (class, n_min, count) in runs {
        let report = scan(&ScanSpec::new(class, n_min, 18, count, 5)).map_err(|e| e.to_string())?;
        let s = &report.summary;
        ensure(s.evaluated == count, || format!("{class}: {} skipped", s.skipped))?;
        ensure(s.violations.is_empty(), || format!("{class}: violations at {:?}", s.violations))?;
        parts.push(format!("{class} {count}"));
    }
    Ok(format!("zero violations ({})", parts.join(", ")))
}

fn min_degree_three() -> Outcome {
    for i in 0..200u64 {
        let n = 4 + (i as usize % 11);
        let g = random_min_degree3(n, 3000 + i).map_err(|e| e.to_string())?;
        ensure(g.min_degree().is_some_and(|d| d >= 3) && g.n() <= 14, || format!("instance {i} out of class"))?;
        let g2 = gamma2_bruteforce(&g).map_err(|e| e.to_string())?.gamma2;
        ensure(g2 <= g.n() / 2, || format!("instance {i}: gamma2 {g2} > n/2 with n = {}", g.n()))?;
    }
    Ok("200 graphs with min degree 3 satisfy gamma2 <= n/2".into())
}

fn rule_verification() -> Outcome {
    let mut rng = rng_from_seed(7);
    let mut parts = Vec::new();
    for rule in Rule::ALL {
        for i in 0..100 {
            let (g, r) = rule_instance(rule, 18, &mut rng).map_err(|e| format!("{rule}: {e}"))?;
            let (step, h) = (&r.step, &r.graph);
            let v = verify_step(&g, step, h).map_err(|e| format!("{rule} {i}: {e}"))?;
            ensure(v.passed(), || format!("{rule} {i}: {v:?}\n{}", g.to_edge_list()))?;
            ensure(g.n() <= 18, || format!("{rule} {i}: n = {}", g.n()))?;
            ensure(step.f_before == g.potential() && step.f_after == h.potential(), || format!("{rule} {i}: f"))?;
            let count = |role: &str| step.anchors.iter().filter(|a| a.role == role).count();
            let (s, t) = (count("tip"), count("leaf"));
            let (offset, m_drop) = match rule {
                Rule::CycleEdge => (Some(0), Some(1)),
                Rule::InducedPath | Rule::PendantPath | Rule::DeepTree => (Some(2), Some(3)),
                Rule::SubdividedStar => (Some(s + t + 1), Some(2 * s + t + 2)),
                _ => (None, None),
            };
            ensure(step.offset == offset, || format!("{rule} {i}: offset {:?}", step.offset))?;
            if let Some(d) = m_drop {
                ensure(g.m() - h.m() == d, || format!("{rule} {i}: m drops by {}", g.m() - h.m()))?;
            }
            if offset.is_some() {
                ensure(v.gamma2_inequality_ok == Some(true), || format!("{rule} {i}: gamma2 inequality"))?;
                ensure(v.a_inequality_ok == Some(true), || format!("{rule} {i}: a inequality"))?;
            }
            if rule == Rule::InducedPath {
                ensure(step.f_before - step.f_after == 12, || format!("{rule} {i}: f drop"))?;
            }
            if rule.decreases_potential() {
                ensure(step.f_after < step.f_before, || format!("{rule} {i}: f did not drop"))?;
            }
        }
        parts.push(rule.name());
    }
    Ok(format!("100 instances each: {}", parts.join(", ")))
}

fn structural_consistency() -> Outcome {
    let mut members = family_members();
    members.push(FamilyParams::new(4, vec![1, 2, 3, 4]).map_err(|e| e.to_string())?);
    for c0 in 1..=3 {
        members.push(gap_witness(c0).map_err(|e| e.to_string())?.params);
    }
    for p in &members {
        let g = p.generate();
        let h = sun_free_hypotheses(&g);
        ensure(!h.no_sun_at_outer && !h.all, || format!("{p}: no_sun_at_outer = {}", h.no_sun_at_outer))?;
        let r = conjecture_check(&g).map_err(|e| e.to_string())?;
        ensure(!r.holds, || format!("{p}: conjecture holds"))?;
    }
    Ok(format!("{} members all have a sun and violate the bound", members.len()))
}

fn base_case() -> Outcome {
    let k2 = Graph::path(2);
    let g2 = gamma2(&k2).map_err(|e| e.to_string())?.gamma2;
    let a = annihilation(&k2).a;
    ensure(g2 == 2 && g2 == a + 1, || format!("K2: gamma2 {g2}, a {a}"))?;
    let mut trees: Vec<Graph> = (2..=18).flat_map(|n| [Graph::path(n), Graph::star(n - 1)]).collect();
    for i in 0..500u64 {
        trees.push(random_tree(2 + i as usize % 17, 4000 + i).map_err(|e| e.to_string())?);
    }
    for t in &trees {
        let trace = reduce_trace(t);
        ensure(trace.terminal_reason == TerminalReason::BaseCaseK2, || format!("tree ends {:?}\n{}", trace.terminal_reason, t.to_edge_list()))?;
        ensure(trace.is_consistent(), || "inconsistent trace".into())?;
    }
    Ok(format!("K2 gives 2 = a + 1; {} trees reduce to K2", trees.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("sporadic counterexample", sporadic_counterexample),
        ("family closed forms", family_closed_forms),
        ("gap witnesses", gap_witnesses),
        ("oracle equivalence", oracle_equivalence),
        ("conjecture on proven classes", proven_classes),
        ("min degree 3 bound", min_degree_three),
        ("rule verification suite", rule_verification),
        ("structural consistency", structural_consistency),
        ("base case", base_case),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Backend, DominationCertificate, Masks};

pub const BRUTE_FORCE_CAP: usize = 24;

/// Reference oracle: tries every candidate set in order of increasing size.
///
/// Leaves can only be 2-dominated by being in the set, so they are always
/// included and only the remaining vertices are enumerated.
pub fn gamma2_bruteforce(g: &Graph) -> Result<DominationCertificate> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Capacity { n, cap: BRUTE_FORCE_CAP });
    }
    let d = g.dense();
    let masks = Masks::new(&d);

    // Permute so free vertices occupy the low bits; a combination over the
    // free bits then needs no remapping.
    let mut perm: Vec<usize> = (0..n).filter(|&i| masks.leaves >> i & 1 == 0).collect();
    let free = perm.len();
    perm.extend((0..n).filter(|&i| masks.leaves >> i & 1 == 1));
    let mut pos = vec![0; n];
    for (p, &i) in perm.iter().enumerate() {
        pos[i] = p;
    }
    let nbr: Vec<u64> = perm
        .iter()
        .map(|&i| d.adj[i].iter().fold(0u64, |m, &j| m | 1 << pos[j]))
        .collect();
    let forced: u64 = ((1u64 << n) - 1) & !((1u64 << free) - 1);
    let permuted = Masks { nbr, leaves: forced };

    for k in 0..=free {
        if let Some(combo) = first_combination(free, k, |c| permuted.dominates(c | forced)) {
            let set = combo | forced;
            let witness = d.to_ids((0..n).filter(|&p| set >> p & 1 == 1).map(|p| perm[p]));
            return Ok(DominationCertificate {
                gamma2: witness.len(),
                witness,
                backend: Backend::Bruteforce,
            });
        }
    }
    unreachable!("V(G) is always 2-dominating")
}

/// First `k`-subset of `0..r` (as a bitmask, in Gosper order) accepted by `ok`.
fn first_combination(r: usize, k: usize, mut ok: impl FnMut(u64) -> bool) -> Option<u64> {
    if k == 0 {
        return ok(0).then_some(0);
    }
    let limit = 1u64 << r;
    let mut c = (1u64 << k) - 1;
    while c < limit {
        if ok(c) {
            return Some(c);
        }
        let lowest = c & c.wrapping_neg();
        let ripple = c + lowest;
        c = (((ripple ^ c) >> 2) / lowest) | ripple;
    }
    None
}

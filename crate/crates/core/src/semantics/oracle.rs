//! Reference semantics by exhaustive subset enumeration.
//!
//! Each subset of the arguments is tested directly against the textbook
//! definitions using nothing but the raw attack list. Shares no code with
//! the production algorithms so that the two can be cross-checked.

use crate::argset::ArgSet;
use crate::graph::ArgumentationGraph;
use crate::semantics::{Extension, Semantics};

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_ARGUMENTS: usize = 16;

struct Raw {
    n: usize,
    attacks: Vec<(usize, usize)>,
}

impl Raw {
    fn attacks(&self, x: usize, y: usize) -> bool {
        self.attacks.contains(&(x, y))
    }

    fn conflict_free(&self, mask: u32) -> bool {
        !self
            .attacks
            .iter()
            .any(|&(x, y)| in_mask(mask, x) && in_mask(mask, y))
    }

    fn defends(&self, mask: u32, a: usize) -> bool {
        self.attacks
            .iter()
            .filter(|&&(_, t)| t == a)
            .all(|&(y, _)| (0..self.n).any(|z| in_mask(mask, z) && self.attacks(z, y)))
    }

    fn complete(&self, mask: u32) -> bool {
        if !self.conflict_free(mask) {
            return false;
        }
        let defends_members = (0..self.n)
            .filter(|&a| in_mask(mask, a))
            .all(|a| self.defends(mask, a));
        let holds_defended = (0..self.n)
            .filter(|&a| self.defends(mask, a))
            .all(|a| in_mask(mask, a));
        defends_members && holds_defended
    }

    fn stable(&self, mask: u32) -> bool {
        self.conflict_free(mask)
            && (0..self.n)
                .filter(|&a| !in_mask(mask, a))
                .all(|a| (0..self.n).any(|z| in_mask(mask, z) && self.attacks(z, a)))
    }
}

fn in_mask(mask: u32, i: usize) -> bool {
    mask & (1 << i) != 0
}

fn strict_subset(a: u32, b: u32) -> bool {
    a != b && a & !b == 0
}

/// Extensions of `graph` under `semantics`, computed by brute force.
///
/// # Panics
///
/// If the graph has more than [`ORACLE_MAX_ARGUMENTS`] arguments.
pub fn naive_extensions(graph: &ArgumentationGraph, semantics: Semantics) -> Vec<Extension> {
    let n = graph.len();
    assert!(n <= ORACLE_MAX_ARGUMENTS, "oracle limited to {ORACLE_MAX_ARGUMENTS} arguments");
    let raw = Raw {
        n,
        attacks: graph.attack_pairs().collect(),
    };
    let all = 0..(1u32 << n);
    let complete: Vec<u32> = all.clone().filter(|&m| raw.complete(m)).collect();
    let masks: Vec<u32> = match semantics {
        Semantics::Complete => complete,
        Semantics::Stable => all.filter(|&m| raw.stable(m)).collect(),
        Semantics::Preferred => complete
            .iter()
            .copied()
            .filter(|&m| !complete.iter().any(|&o| strict_subset(m, o)))
            .collect(),
        Semantics::Grounded => complete
            .iter()
            .copied()
            .filter(|&m| !complete.iter().any(|&o| strict_subset(o, m)))
            .collect(),
    };
    let mut out: Vec<Extension> = masks
        .into_iter()
        .map(|m| Extension::new(ArgSet::from_indices(n, (0..n).filter(|&i| in_mask(m, i)))))
        .collect();
    out.sort();
    out
}

//! Exhaustive and random generation of small labeled graphs over the
//! arguments `a1..an`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{ArgumentId, ArgumentationGraph};

/// Largest `n` accepted by [`enumerate_graphs`]: `2^(n²)` must fit a `u64`
/// mask, and the names `a1..an` must sort in index order.
pub const MAX_ENUMERATION_SIZE: usize = 6;

fn labeled_arguments(n: usize) -> Vec<ArgumentId> {
    let mut names: Vec<ArgumentId> = (1..=n)
        .map(|i| ArgumentId::new(format!("a{i}")).expect("generated names are valid tokens"))
        .collect();
    names.sort();
    names
}

/// Number of labeled digraphs (self-loops allowed) on `n` arguments.
pub fn graph_count(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(Error::EnumerationSize(n));
    }
    Ok(1u64 << (n * n))
}

/// The graph whose attack set is encoded by `mask`: bit `k` stands for the
/// `k`-th pair `(ai, aj)` in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Result<ArgumentationGraph> {
    let count = graph_count(n)?;
    if mask >= count {
        return Err(Error::EnumerationSize(n));
    }
    let mut graph = ArgumentationGraph::with_arguments(labeled_arguments(n));
    for bit in 0..n * n {
        if mask & (1 << bit) != 0 {
            graph.insert_pair(bit / n, bit % n);
        }
    }
    Ok(graph)
}

/// Iterator over all `2^(n²)` graphs on `a1..an`, in ascending mask order.
#[derive(Debug, Clone)]
pub struct GraphEnumeration {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for GraphEnumeration {
    type Item = ArgumentationGraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let graph = graph_from_mask(self.n, self.next).expect("mask within range");
        self.next += 1;
        Some(graph)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for GraphEnumeration {}

pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration> {
    Ok(GraphEnumeration {
        n,
        next: 0,
        end: graph_count(n)?,
    })
}

/// A graph on `a1..an` where every ordered pair, self-loops included, is an
/// attack independently with probability 1/2.
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ArgumentationGraph {
    let names: Vec<ArgumentId> = if n <= 9 {
        labeled_arguments(n)
    } else {
        // zero-pad so that lexicographic order matches numeric order
        let width = n.to_string().len();
        (1..=n)
            .map(|i| ArgumentId::new(format!("a{i:0width$}")).expect("valid token"))
            .collect()
    };
    let mut graph = ArgumentationGraph::with_arguments(names);
    for s in 0..n {
        for t in 0..n {
            if rng.gen_bool(0.5) {
                graph.insert_pair(s, t);
            }
        }
    }
    graph
}

//! Extension semantics (complete, preferred, stable, grounded), complete
//! labellings and the conversions between the two views.
//!
//! Every returned collection is in canonical order: extensions by size and
//! then by member list, labellings by their label vector with
//! `In < Out < Und`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::argset::ArgSet;
use crate::graph::{ArgumentId, ArgumentationGraph};

pub mod oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Complete,
    Preferred,
    Stable,
    Grounded,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::Grounded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
            Semantics::Grounded => "grounded",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "complete" | "co" => Ok(Semantics::Complete),
            "preferred" | "pr" => Ok(Semantics::Preferred),
            "stable" | "st" => Ok(Semantics::Stable),
            "grounded" | "gr" => Ok(Semantics::Grounded),
            other => Err(format!("unknown semantics {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
    Und,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Und => "und",
        })
    }
}

/// A total labelling of a graph's arguments, indexed like the graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labelling(Vec<Label>);

impl Labelling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labelling(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn get(&self, index: usize) -> Label {
        self.0[index]
    }

    pub fn label_of(&self, graph: &ArgumentationGraph, name: &ArgumentId) -> Option<Label> {
        graph.index_of(name).and_then(|i| self.0.get(i).copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn in_set(&self) -> ArgSet {
        self.with_label(Label::In)
    }

    pub fn with_label(&self, label: Label) -> ArgSet {
        ArgSet::from_indices(
            self.0.len(),
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == label)
                .map(|(i, _)| i),
        )
    }

    /// Renders as `a:in,b:out` using the graph's names.
    pub fn display(&self, graph: &ArgumentationGraph) -> String {
        self.0
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{}:{}", graph.argument(i), l))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A set of arguments produced by one of the semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Extension(ArgSet);

impl Extension {
    pub fn new(members: ArgSet) -> Self {
        Extension(members)
    }

    pub fn members(&self) -> &ArgSet {
        &self.0
    }

    pub fn into_members(self) -> ArgSet {
        self.0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self, graph: &ArgumentationGraph) -> Vec<ArgumentId> {
        graph.names(&self.0)
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Arguments defended by `set`.
pub fn characteristic(graph: &ArgumentationGraph, set: &ArgSet) -> ArgSet {
    let defeated = graph.attacked_by(set);
    ArgSet::from_indices(
        graph.len(),
        (0..graph.len()).filter(|&a| graph.attackers_of(a).is_subset(&defeated)),
    )
}

/// Least fixed point of [`characteristic`], iterated from the empty set.
pub fn grounded_extension(graph: &ArgumentationGraph) -> Extension {
    let mut current = ArgSet::empty(graph.len());
    loop {
        let next = characteristic(graph, &current);
        if next == current {
            return Extension(current);
        }
        current = next;
    }
}

pub fn complete_extensions(graph: &ArgumentationGraph) -> Vec<Extension> {
    let grounded = grounded_extension(graph).into_members();
    let excluded = graph.attacked_by(&grounded);
    // every complete extension contains the grounded one and is disjoint
    // from what it attacks; self-attackers never qualify
    let candidates: Vec<usize> = (0..graph.len())
        .filter(|&a| !grounded.contains(a) && !excluded.contains(a) && !graph.has_attack(a, a))
        .collect();

    let mut found = Vec::new();
    let mut current = grounded;
    search_complete(graph, &candidates, 0, &mut current, &mut found);
    found.sort();
    found
}

fn search_complete(
    graph: &ArgumentationGraph,
    candidates: &[usize],
    depth: usize,
    current: &mut ArgSet,
    found: &mut Vec<Extension>,
) {
    if depth == candidates.len() {
        if characteristic(graph, current) == *current {
            found.push(Extension(current.clone()));
        }
        return;
    }
    let a = candidates[depth];
    search_complete(graph, candidates, depth + 1, current, found);
    if graph.targets_of(a).is_disjoint(current) && graph.attackers_of(a).is_disjoint(current) {
        current.insert(a);
        search_complete(graph, candidates, depth + 1, current, found);
        current.remove(a);
    }
}

pub fn preferred_extensions(graph: &ArgumentationGraph) -> Vec<Extension> {
    maximal(complete_extensions(graph))
}

fn maximal(sets: Vec<Extension>) -> Vec<Extension> {
    sets.iter()
        .filter(|e| {
            !sets
                .iter()
                .any(|other| other.len() > e.len() && e.0.is_subset(&other.0))
        })
        .cloned()
        .collect()
}

/// Conflict-free sets attacking every argument outside themselves.
pub fn stable_extensions(graph: &ArgumentationGraph) -> Vec<Extension> {
    let mut found = Vec::new();
    let mut current = ArgSet::empty(graph.len());
    search_stable(graph, 0, &mut current, &mut found);
    found.sort();
    found
}

fn search_stable(
    graph: &ArgumentationGraph,
    next: usize,
    current: &mut ArgSet,
    found: &mut Vec<Extension>,
) {
    if next == graph.len() {
        let covered = current.union(&graph.attacked_by(current));
        if covered.len() == graph.len() {
            found.push(Extension(current.clone()));
        }
        return;
    }
    search_stable(graph, next + 1, current, found);
    if !graph.has_attack(next, next)
        && graph.targets_of(next).is_disjoint(current)
        && graph.attackers_of(next).is_disjoint(current)
    {
        current.insert(next);
        search_stable(graph, next + 1, current, found);
        current.remove(next);
    }
}

pub fn extensions(graph: &ArgumentationGraph, semantics: Semantics) -> Vec<Extension> {
    match semantics {
        Semantics::Complete => complete_extensions(graph),
        Semantics::Preferred => preferred_extensions(graph),
        Semantics::Stable => stable_extensions(graph),
        Semantics::Grounded => vec![grounded_extension(graph)],
    }
}

/// The label a complete labelling must give `a`, given its attackers' labels.
fn required_label(graph: &ArgumentationGraph, labels: &[Label], a: usize) -> Label {
    let mut all_out = true;
    for b in graph.attackers_of(a).iter() {
        match labels[b] {
            Label::In => return Label::Out,
            Label::Out => {}
            Label::Und => all_out = false,
        }
    }
    if all_out {
        Label::In
    } else {
        Label::Und
    }
}

pub fn is_complete_labelling(graph: &ArgumentationGraph, labelling: &Labelling) -> bool {
    labelling.len() == graph.len()
        && (0..graph.len()).all(|a| labelling.get(a) == required_label(graph, &labelling.0, a))
}

/// Every complete labelling, found by a depth-first search over label
/// vectors that checks each argument as soon as it and all its attackers
/// are labelled.
pub fn complete_labellings(graph: &ArgumentationGraph) -> Vec<Labelling> {
    let n = graph.len();
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        let last = graph.attackers_of(a).iter().fold(a, usize::max);
        ready[last].push(a);
    }
    let mut labels = vec![Label::Und; n];
    let mut found = Vec::new();
    search_labellings(graph, &ready, 0, &mut labels, &mut found);
    found.sort();
    found
}

fn search_labellings(
    graph: &ArgumentationGraph,
    ready: &[Vec<usize>],
    next: usize,
    labels: &mut Vec<Label>,
    found: &mut Vec<Labelling>,
) {
    if next == labels.len() {
        found.push(Labelling(labels.clone()));
        return;
    }
    for label in [Label::In, Label::Out, Label::Und] {
        labels[next] = label;
        if ready[next]
            .iter()
            .all(|&a| labels[a] == required_label(graph, labels, a))
        {
            search_labellings(graph, ready, next + 1, labels, found);
        }
    }
}

pub fn labellings(graph: &ArgumentationGraph, semantics: Semantics) -> Vec<Labelling> {
    let complete = complete_labellings(graph);
    match semantics {
        Semantics::Complete => complete,
        Semantics::Stable => complete
            .into_iter()
            .filter(|l| !l.0.contains(&Label::Und))
            .collect(),
        Semantics::Preferred => {
            let ins: Vec<ArgSet> = complete.iter().map(Labelling::in_set).collect();
            complete
                .iter()
                .zip(&ins)
                .filter(|(_, s)| !ins.iter().any(|o| o.len() > s.len() && s.is_subset(o)))
                .map(|(l, _)| l.clone())
                .collect()
        }
        Semantics::Grounded => {
            let ins: Vec<ArgSet> = complete.iter().map(Labelling::in_set).collect();
            complete
                .iter()
                .zip(&ins)
                .filter(|(_, s)| !ins.iter().any(|o| o.len() < s.len() && o.is_subset(s)))
                .map(|(l, _)| l.clone())
                .collect()
        }
    }
}

/// Members of `set` are in, arguments attacked by `set` out, the rest und.
pub fn ext2lab(graph: &ArgumentationGraph, set: &ArgSet) -> Labelling {
    let attacked = graph.attacked_by(set);
    Labelling(
        (0..graph.len())
            .map(|a| {
                if set.contains(a) {
                    Label::In
                } else if attacked.contains(a) {
                    Label::Out
                } else {
                    Label::Und
                }
            })
            .collect(),
    )
}

pub fn lab2ext(labelling: &Labelling) -> ArgSet {
    labelling.in_set()
}

//! Exhaustive and sampled checking of attack removal monotonicity, the two
//! labelling lemmas behind it, the labelling/extension correspondence and
//! a handful of structural side claims about degrees.
//!
//! Every check is a pure function of one graph. A [`Violation`] carries the
//! graph and the removed attacks so that it can be replayed on its own.

use std::cell::OnceCell;
use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;
use serde::Serialize;

use crate::argset::ArgSet;
use crate::degrees::{degree_from_extensions, Convention, Degree};
use crate::enumerate::{graph_count, graph_from_mask, random_graph, MAX_ENUMERATION_SIZE};
use crate::error::{Error, Result};
use crate::graph::{ArgumentId, ArgumentationGraph, Attack};
use crate::io::to_tgf;
use crate::semantics::oracle::{naive_extensions, ORACLE_MAX_ARGUMENTS};
use crate::semantics::{
    ext2lab, extensions, lab2ext, labellings, Extension, Label, Labelling, Semantics,
};

/// Attackers up to this count have every subset of their attacks checked.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 6;
/// Extra random subsets drawn when an argument has more attackers than that.
pub const RANDOM_SUBSET_COUNT: usize = 64;
/// Largest graph size accepted for random sampling.
pub const MAX_RANDOM_SIZE: usize = ORACLE_MAX_ARGUMENTS;

/// Signature of a degree assignment, injectable for harness self-tests.
pub type DegreeFn = fn(&ArgumentationGraph, &[Extension], Convention, usize) -> Degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationKind {
    Monotonicity,
    LemmaAddition,
    LemmaRemoval,
    Correspondence,
    SideClaim,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Monotonicity => "MONOTONICITY",
            ViolationKind::LemmaAddition => "LEMMA_ADDITION",
            ViolationKind::LemmaRemoval => "LEMMA_REMOVAL",
            ViolationKind::Correspondence => "CORRESPONDENCE",
            ViolationKind::SideClaim => "SIDE_CLAIM",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub graph: ArgumentationGraph,
    pub kind: ViolationKind,
    pub semantics: Semantics,
    pub convention: Option<Convention>,
    pub argument: Option<ArgumentId>,
    /// Attacks removed from `graph` to obtain the compared graph.
    pub removed: Vec<Attack>,
    pub detail: String,
}

impl Violation {
    fn sort_key(&self) -> impl Ord + '_ {
        (
            self.graph.len(),
            to_tgf(&self.graph),
            self.kind,
            self.semantics,
            self.convention,
            self.argument.as_ref(),
            &self.removed,
            &self.detail,
        )
    }

    pub fn graph_tgf(&self) -> String {
        to_tgf(&self.graph)
    }
}

impl Ord for Violation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Violation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize)]
struct ViolationRecord<'a> {
    kind: ViolationKind,
    semantics: Semantics,
    convention: Option<Convention>,
    argument: Option<&'a ArgumentId>,
    removed: Vec<[&'a ArgumentId; 2]>,
    graph_tgf: String,
    detail: &'a str,
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ViolationRecord {
            kind: self.kind,
            semantics: self.semantics,
            convention: self.convention,
            argument: self.argument.as_ref(),
            removed: self.removed.iter().map(|a| [&a.source, &a.target]).collect(),
            graph_tgf: self.graph_tgf(),
            detail: &self.detail,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}", self.kind, self.semantics)?;
        if let Some(conv) = self.convention {
            write!(f, ", {conv}")?;
        }
        write!(f, "]")?;
        if let Some(arg) = &self.argument {
            write!(f, " argument {arg}")?;
        }
        if !self.removed.is_empty() {
            let removed: Vec<String> = self.removed.iter().map(ToString::to_string).collect();
            write!(f, " removing {}", removed.join(";"))?;
        }
        write!(f, ": {}", self.detail)?;
        let tgf = self.graph_tgf().replace('\n', " ");
        write!(f, " | graph: {}", tgf.trim_end())
    }
}

/// Per-graph memo of extensions and labellings, filled on demand.
struct Analysis {
    graph: ArgumentationGraph,
    extensions: [OnceCell<Vec<Extension>>; 4],
    labellings: [OnceCell<Vec<Labelling>>; 4],
}

fn slot(semantics: Semantics) -> usize {
    match semantics {
        Semantics::Complete => 0,
        Semantics::Preferred => 1,
        Semantics::Stable => 2,
        Semantics::Grounded => 3,
    }
}

impl Analysis {
    fn new(graph: ArgumentationGraph) -> Self {
        Analysis {
            graph,
            extensions: Default::default(),
            labellings: Default::default(),
        }
    }

    fn extensions(&self, semantics: Semantics) -> &[Extension] {
        self.extensions[slot(semantics)].get_or_init(|| extensions(&self.graph, semantics))
    }

    fn labellings(&self, semantics: Semantics) -> &[Labelling] {
        self.labellings[slot(semantics)].get_or_init(|| labellings(&self.graph, semantics))
    }
}

/// `g ⊖ X` for one attacked argument and one subset `X` of its attackers.
struct Variant {
    argument: usize,
    removed: ArgSet,
    analysis: Option<Analysis>, // None when nothing is removed
}

fn fnv1a(graph: &ArgumentationGraph) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |v: u64| {
        for byte in v.to_le_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    feed(graph.len() as u64);
    for (s, t) in graph.attack_pairs() {
        feed(s as u64);
        feed(t as u64);
    }
    hash
}

/// Subsets of the attackers of `a` whose attacks get removed.
///
/// Exhaustive up to [`EXHAUSTIVE_SUBSET_LIMIT`] attackers. Beyond that: the
/// empty set, all singletons, the full set and [`RANDOM_SUBSET_COUNT`]
/// random subsets seeded from the graph's content and `a`.
pub fn removal_subsets(graph: &ArgumentationGraph, a: usize) -> Vec<ArgSet> {
    let n = graph.len();
    let attackers = graph.attackers_of(a).to_vec();
    let k = attackers.len();
    let pick = |bits: u64| {
        ArgSet::from_indices(
            n,
            attackers
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << i) != 0)
                .map(|(_, &s)| s),
        )
    };
    if k <= EXHAUSTIVE_SUBSET_LIMIT {
        return (0..1u64 << k).map(pick).collect();
    }
    let mut subsets = vec![ArgSet::empty(n), graph.attackers_of(a).clone()];
    subsets.extend(attackers.iter().map(|&s| ArgSet::from_indices(n, [s])));
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(fnv1a(graph) ^ (a as u64).rotate_left(32));
    for _ in 0..RANDOM_SUBSET_COUNT {
        let subset = ArgSet::from_indices(
            n,
            attackers.iter().copied().filter(|_| rng.gen_bool(0.5)),
        );
        subsets.push(subset);
    }
    let mut seen = std::collections::HashSet::new();
    subsets.retain(|s| seen.insert(s.clone()));
    subsets
}

/// Runs the checks against one graph, sharing extension and labelling
/// computations between them.
struct GraphChecker {
    base: Analysis,
    variants: Vec<Variant>,
}

#[derive(Default)]
struct Tally {
    checks: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self
    }
}

impl GraphChecker {
    fn new(graph: &ArgumentationGraph) -> Self {
        let mut variants = Vec::new();
        for a in 0..graph.len() {
            if graph.attackers_of(a).is_empty() {
                continue;
            }
            for removed in removal_subsets(graph, a) {
                let analysis =
                    (!removed.is_empty()).then(|| Analysis::new(graph.without_attacks_on(a, &removed)));
                variants.push(Variant {
                    argument: a,
                    removed,
                    analysis,
                });
            }
        }
        GraphChecker {
            base: Analysis::new(graph.clone()),
            variants,
        }
    }

    fn graph(&self) -> &ArgumentationGraph {
        &self.base.graph
    }

    fn after<'a>(&'a self, variant: &'a Variant) -> &'a Analysis {
        variant.analysis.as_ref().unwrap_or(&self.base)
    }

    fn removed_attacks(&self, variant: &Variant) -> Vec<Attack> {
        let g = self.graph();
        variant
            .removed
            .iter()
            .map(|s| Attack::new(g.argument(s).clone(), g.argument(variant.argument).clone()))
            .collect()
    }

    fn violation(
        &self,
        kind: ViolationKind,
        semantics: Semantics,
        convention: Option<Convention>,
        argument: Option<usize>,
        removed: Vec<Attack>,
        detail: String,
    ) -> Violation {
        Violation {
            graph: self.graph().clone(),
            kind,
            semantics,
            convention,
            argument: argument.map(|a| self.graph().argument(a).clone()),
            removed,
            detail,
        }
    }

    fn monotonicity(&self, semantics: Semantics, convention: Convention, degree: DegreeFn, tally: &mut Tally) {
        let g = self.graph();
        let before_exts = self.base.extensions(semantics);
        for variant in &self.variants {
            let a = variant.argument;
            let after = self.after(variant);
            let before = degree(g, before_exts, convention, a);
            let after_degree = degree(&after.graph, after.extensions(semantics), convention, a);
            tally.checks += 1;
            if before > after_degree {
                tally.violations.push(self.violation(
                    ViolationKind::Monotonicity,
                    semantics,
                    Some(convention),
                    Some(a),
                    self.removed_attacks(variant),
                    format!("degree {before} before removal, {after_degree} after"),
                ));
            }
        }
    }

    /// A labelling of `g ⊖ X` with `a` out must be a labelling of `g`.
    fn lemma_addition(&self, semantics: Semantics, tally: &mut Tally) {
        let original = self.base.labellings(semantics);
        for variant in &self.variants {
            let a = variant.argument;
            for l in self.after(variant).labellings(semantics) {
                if l.get(a) != Label::Out {
                    continue;
                }
                tally.checks += 1;
                if !original.contains(l) {
                    tally.violations.push(self.violation(
                        ViolationKind::LemmaAddition,
                        semantics,
                        None,
                        Some(a),
                        self.removed_attacks(variant),
                        format!(
                            "labelling {} of the reduced graph is not a labelling of the original",
                            l.display(self.graph())
                        ),
                    ));
                }
            }
        }
    }

    /// A labelling of `g` with `a` in must be a labelling of `g ⊖ X`.
    fn lemma_removal(&self, semantics: Semantics, tally: &mut Tally) {
        let original = self.base.labellings(semantics);
        for variant in &self.variants {
            let a = variant.argument;
            let reduced = self.after(variant).labellings(semantics);
            for l in original.iter().filter(|l| l.get(a) == Label::In) {
                tally.checks += 1;
                if !reduced.contains(l) {
                    tally.violations.push(self.violation(
                        ViolationKind::LemmaRemoval,
                        semantics,
                        None,
                        Some(a),
                        self.removed_attacks(variant),
                        format!(
                            "labelling {} of the original graph is not a labelling of the reduced graph",
                            l.display(self.graph())
                        ),
                    ));
                }
            }
        }
    }

    fn correspondence(&self, semantics: &[Semantics], tally: &mut Tally) {
        let g = self.graph();
        let describe = |exts: &[Extension]| -> String {
            let parts: Vec<String> = exts
                .iter()
                .map(|e| {
                    let names: Vec<String> = e.names(g).iter().map(ToString::to_string).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect();
            format!("[{}]", parts.join(", "))
        };
        let fail = |sem: Semantics, detail: String, tally: &mut Tally| {
            tally.violations.push(self.violation(
                ViolationKind::Correspondence,
                sem,
                None,
                None,
                Vec::new(),
                detail,
            ));
        };

        for &sem in semantics {
            let exts = self.base.extensions(sem);
            let labs = self.base.labellings(sem);

            let mut from_labellings: Vec<Extension> =
                labs.iter().map(|l| Extension::new(lab2ext(l))).collect();
            from_labellings.sort();
            tally.checks += 1;
            if from_labellings != exts {
                fail(
                    sem,
                    format!(
                        "labelling in-sets {} differ from extensions {}",
                        describe(&from_labellings),
                        describe(exts)
                    ),
                    tally,
                );
            }

            let mut images: Vec<Labelling> = exts.iter().map(|e| ext2lab(g, e.members())).collect();
            images.sort();
            tally.checks += 1;
            if images != labs {
                fail(sem, "labellings are not the image of the extensions under ext2lab".into(), tally);
            }

            if g.len() <= ORACLE_MAX_ARGUMENTS {
                let reference = naive_extensions(g, sem);
                tally.checks += 1;
                if reference != exts {
                    fail(
                        sem,
                        format!("extensions {} differ from brute force {}", describe(exts), describe(&reference)),
                        tally,
                    );
                }
            }

            if sem != Semantics::Stable {
                tally.checks += 1;
                if exts.is_empty() {
                    fail(sem, "no extension".into(), tally);
                }
            }

            let complete = self.base.extensions(Semantics::Complete);
            match sem {
                Semantics::Grounded => {
                    let grounded = &exts[0];
                    let mut common = ArgSet::full(g.len());
                    for e in complete {
                        common.intersect_with(e.members());
                    }
                    tally.checks += 2;
                    if exts.len() != 1 || grounded.members() != &common {
                        fail(sem, "grounded extension is not the intersection of complete extensions".into(), tally);
                    }
                    let minimal: Vec<&Extension> = complete
                        .iter()
                        .filter(|e| {
                            !complete
                                .iter()
                                .any(|o| o.len() < e.len() && o.members().is_subset(e.members()))
                        })
                        .collect();
                    if minimal != [grounded] {
                        fail(sem, "grounded extension is not the unique minimal complete extension".into(), tally);
                    }
                }
                Semantics::Preferred => {
                    tally.checks += 1;
                    if !exts.iter().all(|e| complete.contains(e)) {
                        fail(sem, "a preferred extension is not complete".into(), tally);
                    }
                }
                Semantics::Stable => {
                    let preferred = self.base.extensions(Semantics::Preferred);
                    tally.checks += 1;
                    if !exts.iter().all(|e| preferred.contains(e)) {
                        fail(sem, "a stable extension is not preferred".into(), tally);
                    }
                }
                Semantics::Complete => {}
            }
        }
    }

    fn side_claims(&self, semantics: &[Semantics], tally: &mut Tally) {
        let g = self.graph();
        for &sem in semantics {
            let exts = self.base.extensions(sem);
            for a in 0..g.len() {
                let d = degree_from_extensions(g, exts, Convention::Standard, a);
                let claim = |broken: bool, detail: String, tally: &mut Tally| {
                    tally.checks += 1;
                    if broken {
                        tally.violations.push(self.violation(
                            ViolationKind::SideClaim,
                            sem,
                            Some(Convention::Standard),
                            Some(a),
                            Vec::new(),
                            detail,
                        ));
                    }
                };
                if sem == Semantics::Grounded {
                    claim(d == Degree::Credulous, "credulous degree under grounded semantics".into(), tally);
                }
                if sem == Semantics::Stable && !exts.is_empty() {
                    claim(
                        d == Degree::WeakUndecided,
                        "degree 0.3 under stable semantics with extensions".into(),
                        tally,
                    );
                }
                if g.attackers_of(a).is_empty() && !exts.is_empty() {
                    claim(d != Degree::Skeptical, format!("unattacked argument has degree {d}"), tally);
                }
            }
        }
    }
}

pub fn check_monotonicity(
    graph: &ArgumentationGraph,
    semantics: Semantics,
    convention: Convention,
) -> Vec<Violation> {
    check_monotonicity_with(graph, semantics, convention, degree_from_extensions)
}

/// [`check_monotonicity`] against an arbitrary degree function.
pub fn check_monotonicity_with(
    graph: &ArgumentationGraph,
    semantics: Semantics,
    convention: Convention,
    degree: DegreeFn,
) -> Vec<Violation> {
    let mut tally = Tally::default();
    GraphChecker::new(graph).monotonicity(semantics, convention, degree, &mut tally);
    tally.violations
}

pub fn check_lemma_addition(graph: &ArgumentationGraph, semantics: Semantics) -> Vec<Violation> {
    let mut tally = Tally::default();
    GraphChecker::new(graph).lemma_addition(semantics, &mut tally);
    tally.violations
}

pub fn check_lemma_removal(graph: &ArgumentationGraph, semantics: Semantics) -> Vec<Violation> {
    let mut tally = Tally::default();
    GraphChecker::new(graph).lemma_removal(semantics, &mut tally);
    tally.violations
}

pub fn check_correspondence(graph: &ArgumentationGraph) -> Vec<Violation> {
    let mut tally = Tally::default();
    GraphChecker::new(graph).correspondence(&Semantics::ALL, &mut tally);
    tally.violations
}

pub fn check_side_claims(graph: &ArgumentationGraph) -> Vec<Violation> {
    let mut tally = Tally::default();
    GraphChecker::new(graph).side_claims(&Semantics::ALL, &mut tally);
    tally.violations
}

/// Which checks a sweep runs on every graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckSelection {
    pub monotonicity: bool,
    pub lemmas: bool,
    pub correspondence: bool,
    pub side_claims: bool,
}

impl CheckSelection {
    pub const ALL: CheckSelection = CheckSelection {
        monotonicity: true,
        lemmas: true,
        correspondence: true,
        side_claims: true,
    };
}

impl Default for CheckSelection {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Every graph with `1..=max_n` arguments is checked.
    pub max_n: usize,
    /// Size of randomly sampled graphs; requires `samples`.
    pub random_n: Option<usize>,
    pub samples: Option<u64>,
    pub seed: u64,
    pub semantics: Vec<Semantics>,
    pub conventions: Vec<Convention>,
    pub checks: CheckSelection,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 4,
            random_n: None,
            samples: None,
            seed: 0,
            semantics: Semantics::ALL.to_vec(),
            conventions: Convention::ALL.to_vec(),
            checks: CheckSelection::ALL,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if self.max_n == 0 || self.max_n > MAX_ENUMERATION_SIZE {
            return invalid(format!("max_n must be in 1..={MAX_ENUMERATION_SIZE}"));
        }
        match (self.random_n, self.samples) {
            (Some(n), Some(_)) if n == 0 || n > MAX_RANDOM_SIZE => {
                return invalid(format!("random_n must be in 1..={MAX_RANDOM_SIZE}"))
            }
            (Some(_), None) => return invalid("random_n requires samples".into()),
            (None, Some(_)) => return invalid("samples requires random_n".into()),
            _ => {}
        }
        if self.semantics.is_empty() {
            return invalid("no semantics selected".into());
        }
        if self.conventions.is_empty() {
            return invalid("no convention selected".into());
        }
        Ok(())
    }

    fn distinct_semantics(&self) -> Vec<Semantics> {
        let mut s = self.semantics.clone();
        s.sort();
        s.dedup();
        s
    }

    fn distinct_conventions(&self) -> Vec<Convention> {
        let mut c = self.conventions.clone();
        c.sort();
        c.dedup();
        c
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub graphs_checked: u64,
    pub checks_performed: u64,
    pub violations: Vec<Violation>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(u64::try_from(d.as_millis()).unwrap_or(u64::MAX))
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Equality on everything except the elapsed time.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        self.graphs_checked == other.graphs_checked
            && self.checks_performed == other.checks_performed
            && self.violations == other.violations
    }

    pub fn violations_of(&self, kind: ViolationKind) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.kind == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs checked:   {}", self.graphs_checked)?;
        writeln!(f, "checks performed: {}", self.checks_performed)?;
        writeln!(f, "violations:       {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        write!(f, "elapsed:          {} ms", self.elapsed.as_millis())
    }
}

struct Plan {
    semantics: Vec<Semantics>,
    conventions: Vec<Convention>,
    checks: CheckSelection,
    degree: DegreeFn,
}

impl Plan {
    fn run(&self, graph: &ArgumentationGraph) -> Tally {
        let checker = GraphChecker::new(graph);
        let mut tally = Tally::default();
        for &sem in &self.semantics {
            if self.checks.monotonicity {
                for &conv in &self.conventions {
                    checker.monotonicity(sem, conv, self.degree, &mut tally);
                }
            }
            if self.checks.lemmas {
                checker.lemma_addition(sem, &mut tally);
                checker.lemma_removal(sem, &mut tally);
            }
        }
        if self.checks.correspondence {
            checker.correspondence(&self.semantics, &mut tally);
        }
        if self.checks.side_claims {
            checker.side_claims(&self.semantics, &mut tally);
        }
        tally
    }
}

pub fn sweep(config: &SweepConfig) -> Result<VerificationReport> {
    sweep_with(config, degree_from_extensions)
}

/// [`sweep`] with the monotonicity checks using `degree`.
///
/// Runs on the current rayon thread pool.
pub fn sweep_with(config: &SweepConfig, degree: DegreeFn) -> Result<VerificationReport> {
    config.validate()?;
    let started = Instant::now();
    let plan = Plan {
        semantics: config.distinct_semantics(),
        conventions: config.distinct_conventions(),
        checks: config.checks,
        degree,
    };

    let mut graphs_checked = 0u64;
    let mut total = Tally::default();
    for n in 1..=config.max_n {
        let count = graph_count(n)?;
        let tally = (0..count)
            .into_par_iter()
            .map(|mask| plan.run(&graph_from_mask(n, mask).expect("mask within range")))
            .reduce(Tally::default, Tally::merge);
        graphs_checked += count;
        total = total.merge(tally);
    }

    if let (Some(n), Some(samples)) = (config.random_n, config.samples) {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(config.seed);
        let graphs: Vec<ArgumentationGraph> =
            (0..samples).map(|_| random_graph(n, &mut rng)).collect();
        let tally = graphs
            .par_iter()
            .map(|g| plan.run(g))
            .reduce(Tally::default, Tally::merge);
        graphs_checked += samples;
        total = total.merge(tally);
    }

    total.violations.sort();
    Ok(VerificationReport {
        graphs_checked,
        checks_performed: total.checks,
        violations: total.violations,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{complete_labellings, Label::*};

    fn g(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationGraph {
        ArgumentationGraph::from_names(args, attacks).unwrap()
    }

    fn f3() -> ArgumentationGraph {
        g(&["a", "b"], &[("a", "b"), ("b", "a")])
    }

    fn f6() -> ArgumentationGraph {
        g(&["a", "b", "c"], &[("b", "a"), ("c", "a"), ("b", "c"), ("c", "b")])
    }

    fn self_loop() -> ArgumentationGraph {
        g(&["a"], &[("a", "a")])
    }

    #[test]
    fn monotonicity_examples() {
        for conv in Convention::ALL {
            assert!(check_monotonicity(&f6(), Semantics::Preferred, conv).is_empty());
            for sem in Semantics::ALL {
                assert!(check_monotonicity(&g(&["a"], &[]), sem, conv).is_empty());
            }
        }
        assert!(check_monotonicity(&self_loop(), Semantics::Stable, Convention::Alternative).is_empty());
    }

    #[test]
    fn f6_spot_degrees() {
        use crate::degrees::degree;
        let a = ArgumentId::new("a").unwrap();
        let x = [Attack::parse("b", "a").unwrap()];
        let reduced = f6().remove_attacks(&x).unwrap();
        assert_eq!(degree(&f6(), Semantics::Preferred, Convention::Standard, &a).unwrap(), Degree::Zero);
        assert_eq!(
            degree(&reduced, Semantics::Preferred, Convention::Standard, &a).unwrap(),
            Degree::Credulous
        );
        let removed_loop = self_loop().remove_attacks(&[Attack::parse("a", "a").unwrap()]).unwrap();
        assert_eq!(
            degree(&self_loop(), Semantics::Stable, Convention::Alternative, &a).unwrap(),
            Degree::Zero
        );
        assert_eq!(
            degree(&removed_loop, Semantics::Stable, Convention::Alternative, &a).unwrap(),
            Degree::Skeptical
        );
    }

    #[test]
    fn lemma_addition_examples() {
        let x = [Attack::parse("b", "a").unwrap()];
        let reduced = f6().remove_attacks(&x).unwrap();
        // order a, b, c
        let l = Labelling::new(vec![Out, Out, In]);
        assert!(complete_labellings(&reduced).contains(&l));
        assert!(complete_labellings(&f6()).contains(&l));
        assert!(check_lemma_addition(&f6(), Semantics::Complete).is_empty());

        let g2 = g(&["a", "b"], &[("b", "a")]);
        let freed = g2.remove_attacks(&x).unwrap();
        assert!(complete_labellings(&freed).iter().all(|l| l.get(0) == In));
        assert!(check_lemma_addition(&g2, Semantics::Complete).is_empty());
    }

    #[test]
    fn lemma_removal_examples() {
        let g1 = g(&["a", "b", "c"], &[("c", "b"), ("b", "a")]);
        let x = [Attack::parse("b", "a").unwrap()];
        let l = Labelling::new(vec![In, Out, In]);
        assert!(complete_labellings(&g1).contains(&l));
        assert!(complete_labellings(&g1.remove_attacks(&x).unwrap()).contains(&l));
        assert!(check_lemma_removal(&g1, Semantics::Complete).is_empty());

        let l = Labelling::new(vec![In, Out]);
        assert!(complete_labellings(&f3().remove_attacks(&x).unwrap()).contains(&l));
        for sem in Semantics::ALL {
            assert!(check_lemma_removal(&f3(), sem).is_empty());
            assert!(check_lemma_addition(&f3(), sem).is_empty());
        }
    }

    #[test]
    fn correspondence_examples() {
        assert!(check_correspondence(&f3()).is_empty());
        assert!(check_correspondence(&self_loop()).is_empty());
        assert!(check_correspondence(&ArgumentationGraph::empty()).is_empty());
    }

    #[test]
    fn side_claims_examples() {
        assert!(check_side_claims(&f3()).is_empty());
        assert!(check_side_claims(&g(&["a", "b"], &[("a", "a"), ("a", "b")])).is_empty());
        assert!(check_side_claims(&g(&["a"], &[])).is_empty());
    }

    #[test]
    fn subsets_are_exhaustive_for_small_in_degree() {
        let subsets = removal_subsets(&f6(), 0);
        assert_eq!(subsets.len(), 4);
        assert!(subsets.contains(&ArgSet::empty(3)));
        assert!(subsets.contains(&ArgSet::from_indices(3, [1, 2])));
    }

    #[test]
    fn subsets_are_sampled_for_large_in_degree() {
        let names: Vec<String> = (0..9).map(|i| format!("x{i}")).collect();
        let args: Vec<&str> = names.iter().map(String::as_str).collect();
        let attacks: Vec<(&str, &str)> = args[1..].iter().map(|s| (*s, "x0")).collect();
        let graph = g(&args, &attacks);
        let subsets = removal_subsets(&graph, 0);
        let all = graph.attackers_of(0).clone();
        assert!(subsets.contains(&ArgSet::empty(9)));
        assert!(subsets.contains(&all));
        for s in all.iter() {
            assert!(subsets.contains(&ArgSet::from_indices(9, [s])));
        }
        assert!(subsets.len() > 10 && subsets.len() <= 2 + 8 + RANDOM_SUBSET_COUNT);
        assert!(subsets.iter().all(|s| s.is_subset(&all)));
        assert_eq!(subsets, removal_subsets(&graph, 0));
        assert!(check_monotonicity(&graph, Semantics::Preferred, Convention::Standard).is_empty());
    }

    #[test]
    fn config_validation() {
        assert!(SweepConfig::default().validate().is_ok());
        let bad = [
            SweepConfig { max_n: 0, ..Default::default() },
            SweepConfig { max_n: MAX_ENUMERATION_SIZE + 1, ..Default::default() },
            SweepConfig { random_n: Some(5), ..Default::default() },
            SweepConfig { samples: Some(5), ..Default::default() },
            SweepConfig { random_n: Some(0), samples: Some(1), ..Default::default() },
            SweepConfig { semantics: vec![], ..Default::default() },
            SweepConfig { conventions: vec![], ..Default::default() },
        ];
        for cfg in bad {
            assert!(matches!(sweep(&cfg), Err(Error::InvalidConfig(_))), "{cfg:?}");
        }
    }

    #[test]
    fn small_sweeps() {
        let report = sweep(&SweepConfig { max_n: 1, ..Default::default() }).unwrap();
        assert_eq!(report.graphs_checked, 2);
        assert!(report.is_clean());
        assert!(report.checks_performed > 0);

        let cfg = SweepConfig {
            max_n: 2,
            random_n: Some(6),
            samples: Some(100),
            seed: 42,
            ..Default::default()
        };
        let report = sweep(&cfg).unwrap();
        assert_eq!(report.graphs_checked, 118);
        assert!(report.is_clean(), "{report}");
    }

    fn swapped(
        graph: &ArgumentationGraph,
        exts: &[Extension],
        convention: Convention,
        a: usize,
    ) -> Degree {
        match degree_from_extensions(graph, exts, convention, a) {
            Degree::Skeptical => Degree::Zero,
            Degree::Zero => Degree::Skeptical,
            d => d,
        }
    }

    #[test]
    fn mutated_degree_is_caught_and_replayable() {
        let violations = check_monotonicity_with(&f3(), Semantics::Grounded, Convention::Standard, swapped);
        assert!(!violations.is_empty());
        let v = &violations[0];
        let replayed = crate::io::parse_graph(v.graph_tgf().as_bytes(), crate::io::GraphFormat::Tgf).unwrap();
        assert_eq!(replayed, v.graph);
        let again = check_monotonicity_with(&replayed, v.semantics, v.convention.unwrap(), swapped);
        assert!(again.contains(v));
        let json: serde_json::Value = serde_json::to_value(v).unwrap();
        assert_eq!(json["kind"], "MONOTONICITY");
        assert_eq!(json["semantics"], "grounded");
        assert_eq!(json["convention"], "standard");
        assert!(json["removed"].as_array().unwrap().iter().all(|p| p.as_array().unwrap().len() == 2));
    }
}

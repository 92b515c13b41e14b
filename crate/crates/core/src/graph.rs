//! The argumentation graph data model and its attack-set algebra.
//!
//! Arguments are kept sorted, so an argument's index inside a graph is its
//! rank in the lexicographic order of names. Index-level sets ([`ArgSet`])
//! are only meaningful relative to the graph that produced them; graphs
//! obtained by adding or removing attacks keep the same argument list and
//! therefore share indices with the original.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::argset::ArgSet;
use crate::error::{Error, Result};

/// Name of an argument, a non-empty `[A-Za-z0-9_]+` token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_valid_token(&name) {
            Ok(ArgumentId(name))
        } else {
            Err(Error::InvalidArgumentId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_valid_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for ArgumentId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// A directed attack `source -> target`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attack {
    pub source: ArgumentId,
    pub target: ArgumentId,
}

impl Attack {
    pub fn new(source: ArgumentId, target: ArgumentId) -> Self {
        Attack { source, target }
    }

    /// Builds an attack from two raw tokens.
    pub fn parse(source: &str, target: &str) -> Result<Self> {
        Ok(Attack::new(ArgumentId::new(source)?, ArgumentId::new(target)?))
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.source, self.target)
    }
}

impl fmt::Debug for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.source, self.target)
    }
}

/// A finite argumentation graph: a set of arguments and an attack relation
/// over them.
///
/// Values are immutable; the attack operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgumentationGraph {
    arguments: Vec<ArgumentId>,
    // attackers[t] holds every s with (s, t) in the attack relation
    attackers: Vec<ArgSet>,
    // targets[s] holds every t with (s, t) in the attack relation
    targets: Vec<ArgSet>,
}

impl ArgumentationGraph {
    /// Builds a graph, deduplicating arguments and attacks.
    pub fn new<A, R>(arguments: A, attacks: R) -> Result<Self>
    where
        A: IntoIterator<Item = ArgumentId>,
        R: IntoIterator<Item = Attack>,
    {
        let arguments: Vec<ArgumentId> = arguments
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut graph = Self::with_arguments(arguments);
        for attack in attacks {
            let s = graph.require(&attack.source)?;
            let t = graph.require(&attack.target)?;
            graph.insert_pair(s, t);
        }
        Ok(graph)
    }

    /// Convenience constructor from raw tokens; rejects malformed names.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let arguments = arguments
            .iter()
            .map(|name| ArgumentId::new(*name))
            .collect::<Result<Vec<_>>>()?;
        let attacks = attacks
            .iter()
            .map(|(s, t)| Attack::parse(s, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arguments, attacks)
    }

    pub fn empty() -> Self {
        Self::with_arguments(Vec::new())
    }

    /// `arguments` must already be sorted and free of duplicates.
    pub(crate) fn with_arguments(arguments: Vec<ArgumentId>) -> Self {
        let n = arguments.len();
        ArgumentationGraph {
            arguments,
            attackers: vec![ArgSet::empty(n); n],
            targets: vec![ArgSet::empty(n); n],
        }
    }

    pub(crate) fn insert_pair(&mut self, source: usize, target: usize) {
        self.attackers[target].insert(source);
        self.targets[source].insert(target);
    }

    pub(crate) fn remove_pair(&mut self, source: usize, target: usize) {
        self.attackers[target].remove(source);
        self.targets[source].remove(target);
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    /// Arguments in lexicographic order.
    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn argument(&self, index: usize) -> &ArgumentId {
        &self.arguments[index]
    }

    pub fn index_of(&self, name: &ArgumentId) -> Option<usize> {
        self.arguments.binary_search(name).ok()
    }

    pub fn index_of_str(&self, name: &str) -> Option<usize> {
        self.arguments
            .binary_search_by(|probe| probe.as_str().cmp(name))
            .ok()
    }

    fn require(&self, name: &ArgumentId) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    pub fn attack_count(&self) -> usize {
        self.targets.iter().map(ArgSet::len).sum()
    }

    /// Attack index pairs in lexicographic `(source, target)` order.
    pub fn attack_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |t| (s, t)))
    }

    /// Attacks in lexicographic `(source, target)` order.
    pub fn attacks(&self) -> impl Iterator<Item = Attack> + '_ {
        self.attack_pairs()
            .map(|(s, t)| Attack::new(self.arguments[s].clone(), self.arguments[t].clone()))
    }

    pub fn has_attack(&self, source: usize, target: usize) -> bool {
        self.targets[source].contains(target)
    }

    pub fn contains_attack(&self, attack: &Attack) -> bool {
        match (self.index_of(&attack.source), self.index_of(&attack.target)) {
            (Some(s), Some(t)) => self.has_attack(s, t),
            _ => false,
        }
    }

    pub fn attackers_of(&self, index: usize) -> &ArgSet {
        &self.attackers[index]
    }

    pub fn targets_of(&self, index: usize) -> &ArgSet {
        &self.targets[index]
    }

    pub fn attackers(&self, a: &ArgumentId) -> Result<BTreeSet<ArgumentId>> {
        let i = self.require(a)?;
        Ok(self.names(&self.attackers[i]).into_iter().collect())
    }

    pub fn incoming_attacks(&self, a: &ArgumentId) -> Result<BTreeSet<Attack>> {
        let i = self.require(a)?;
        Ok(self.attackers[i]
            .iter()
            .map(|s| Attack::new(self.arguments[s].clone(), a.clone()))
            .collect())
    }

    /// `self ⊖ x`. Every attack in `x` must belong to the graph.
    pub fn remove_attacks<'a, I>(&self, x: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Attack>,
    {
        let mut out = self.clone();
        for attack in x {
            if !self.contains_attack(attack) {
                return Err(Error::UnknownAttack {
                    from: attack.source.to_string(),
                    to: attack.target.to_string(),
                });
            }
            let s = self.require(&attack.source)?;
            let t = self.require(&attack.target)?;
            out.remove_pair(s, t);
        }
        Ok(out)
    }

    /// `self ⊕ x`. Endpoints must be arguments of the graph.
    pub fn add_attacks<'a, I>(&self, x: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Attack>,
    {
        let mut out = self.clone();
        for attack in x {
            let s = self.require(&attack.source)?;
            let t = self.require(&attack.target)?;
            out.insert_pair(s, t);
        }
        Ok(out)
    }

    /// Removes the attacks `(s, target)` for every `s` in `sources`.
    ///
    /// `sources` is expected to be a subset of the attackers of `target`;
    /// members that do not attack `target` are ignored.
    pub fn without_attacks_on(&self, target: usize, sources: &ArgSet) -> Self {
        let mut out = self.clone();
        for s in sources.iter() {
            out.remove_pair(s, target);
        }
        out
    }

    /// Every argument attacked by some member of `set`.
    pub fn attacked_by(&self, set: &ArgSet) -> ArgSet {
        let mut out = ArgSet::empty(self.len());
        for i in set.iter() {
            out.union_with(&self.targets[i]);
        }
        out
    }

    pub fn conflict_free(&self, set: &ArgSet) -> bool {
        set.iter().all(|i| self.targets[i].is_disjoint(set))
    }

    /// Whether every attacker of `a` is attacked by a member of `set`.
    pub fn defends_index(&self, set: &ArgSet, a: usize) -> bool {
        self.attackers[a].is_subset(&self.attacked_by(set))
    }

    pub fn is_conflict_free<'a, I>(&self, set: I) -> Result<bool>
    where
        I: IntoIterator<Item = &'a ArgumentId>,
    {
        Ok(self.conflict_free(&self.index_set(set)?))
    }

    pub fn defends<'a, I>(&self, set: I, a: &ArgumentId) -> Result<bool>
    where
        I: IntoIterator<Item = &'a ArgumentId>,
    {
        let set = self.index_set(set)?;
        let a = self.require(a)?;
        Ok(self.defends_index(&set, a))
    }

    /// Converts names to an index set, failing on names outside the graph.
    pub fn index_set<'a, I>(&self, names: I) -> Result<ArgSet>
    where
        I: IntoIterator<Item = &'a ArgumentId>,
    {
        let mut set = ArgSet::empty(self.len());
        for name in names {
            set.insert(self.require(name)?);
        }
        Ok(set)
    }

    /// Names of the members of `set`, lexicographically ordered.
    pub fn names(&self, set: &ArgSet) -> Vec<ArgumentId> {
        set.iter().map(|i| self.arguments[i].clone()).collect()
    }
}

impl fmt::Debug for ArgumentationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArgumentationGraph")
            .field("arguments", &self.arguments)
            .field("attacks", &self.attacks().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ArgumentId {
        ArgumentId::new(s).unwrap()
    }

    fn set(names: &[&str]) -> BTreeSet<ArgumentId> {
        names.iter().map(|s| id(s)).collect()
    }

    fn attacks(pairs: &[(&str, &str)]) -> BTreeSet<Attack> {
        pairs.iter().map(|(s, t)| Attack::parse(s, t).unwrap()).collect()
    }

    fn f3() -> ArgumentationGraph {
        ArgumentationGraph::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap()
    }

    fn chain() -> ArgumentationGraph {
        ArgumentationGraph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn self_loop() -> ArgumentationGraph {
        ArgumentationGraph::from_names(&["a"], &[("a", "a")]).unwrap()
    }

    #[test]
    fn argument_tokens() {
        assert!(ArgumentId::new("a_1").is_ok());
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a b").is_err());
        assert!(ArgumentId::new("a-b").is_err());
        assert!(ArgumentId::new("é").is_err());
        assert!(id("a10") < id("a2"));
    }

    #[test]
    fn build_graph() {
        let g = ArgumentationGraph::from_names(&["a"], &[]).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.attack_count(), 0);

        let g = f3();
        assert_eq!(g.arguments(), &[id("a"), id("b")]);
        assert_eq!(g.attacks().collect::<BTreeSet<_>>(), attacks(&[("a", "b"), ("b", "a")]));

        let err = ArgumentationGraph::from_names(&["a"], &[("b", "a")]).unwrap_err();
        assert_eq!(err, Error::UnknownArgument("b".into()));
        assert!(matches!(
            ArgumentationGraph::from_names(&["a", "b!"], &[]),
            Err(Error::InvalidArgumentId(_))
        ));
    }

    #[test]
    fn build_graph_deduplicates() {
        let g = ArgumentationGraph::from_names(&["b", "a", "b"], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.attack_count(), 1);
        assert_eq!(g.argument(0), &id("a"));
    }

    #[test]
    fn attackers_examples() {
        assert_eq!(f3().attackers(&id("a")).unwrap(), set(&["b"]));
        assert_eq!(self_loop().attackers(&id("a")).unwrap(), set(&["a"]));
        assert_eq!(chain().attackers(&id("a")).unwrap(), set(&[]));
        assert_eq!(
            f3().attackers(&id("z")),
            Err(Error::UnknownArgument("z".into()))
        );
    }

    #[test]
    fn incoming_attacks_examples() {
        assert_eq!(f3().incoming_attacks(&id("a")).unwrap(), attacks(&[("b", "a")]));
        let g = ArgumentationGraph::from_names(
            &["a", "b", "c"],
            &[("b", "a"), ("c", "a"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        assert_eq!(
            g.incoming_attacks(&id("a")).unwrap(),
            attacks(&[("b", "a"), ("c", "a")])
        );
        let single = ArgumentationGraph::from_names(&["a"], &[]).unwrap();
        assert!(single.incoming_attacks(&id("a")).unwrap().is_empty());
        assert!(single.incoming_attacks(&id("q")).is_err());
    }

    #[test]
    fn remove_attacks_examples() {
        let g = f3().remove_attacks(&attacks(&[("b", "a")])).unwrap();
        assert_eq!(g, ArgumentationGraph::from_names(&["a", "b"], &[("a", "b")]).unwrap());
        assert_eq!(chain().remove_attacks(&BTreeSet::new()).unwrap(), chain());
        assert_eq!(
            self_loop().remove_attacks(&attacks(&[("a", "a")])).unwrap(),
            ArgumentationGraph::from_names(&["a"], &[]).unwrap()
        );
        assert_eq!(
            chain().remove_attacks(&attacks(&[("c", "a")])),
            Err(Error::UnknownAttack { from: "c".into(), to: "a".into() })
        );
    }

    #[test]
    fn add_attacks_examples() {
        let g = ArgumentationGraph::from_names(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(g.add_attacks(&attacks(&[("b", "a")])).unwrap(), f3());
        assert_eq!(chain().add_attacks(&BTreeSet::new()).unwrap(), chain());
        let x = attacks(&[("a", "b")]);
        assert_eq!(chain().remove_attacks(&x).unwrap().add_attacks(&x).unwrap(), chain());
        assert!(chain().add_attacks(&attacks(&[("a", "q")])).is_err());
    }

    #[test]
    fn conflict_freeness_examples() {
        assert!(f3().is_conflict_free(&set(&["a"])).unwrap());
        assert!(!f3().is_conflict_free(&set(&["a", "b"])).unwrap());
        assert!(!self_loop().is_conflict_free(&set(&["a"])).unwrap());
        assert!(f3().is_conflict_free(&set(&[])).unwrap());
        assert!(f3().is_conflict_free(&set(&["c"])).is_err());
    }

    #[test]
    fn defense_examples() {
        assert!(chain().defends(&set(&["a"]), &id("c")).unwrap());
        assert!(!f3().defends(&set(&[]), &id("a")).unwrap());
        assert!(chain().defends(&set(&[]), &id("a")).unwrap());
        assert!(chain().defends(&set(&["b"]), &id("a")).unwrap());
        assert!(chain().defends(&set(&["q"]), &id("a")).is_err());
    }

    #[test]
    fn index_level_removal_matches_named_removal() {
        let g = ArgumentationGraph::from_names(
            &["a", "b", "c"],
            &[("b", "a"), ("c", "a"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        let sources = ArgSet::from_indices(3, [1, 2]);
        let by_index = g.without_attacks_on(0, &sources);
        let by_name = g.remove_attacks(&g.incoming_attacks(&id("a")).unwrap()).unwrap();
        assert_eq!(by_index, by_name);
        assert!(by_index.attackers_of(0).is_empty());
    }
}

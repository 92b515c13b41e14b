//! Four-valued acceptability degrees derived from a semantics' extensions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ArgumentId, ArgumentationGraph};
use crate::semantics::{extensions, Extension, Semantics};

/// Acceptability degree, ordered `Zero < WeakUndecided < Credulous < Skeptical`.
///
/// The numeric values are 0, 3/10, 1/2 and 1. Comparisons always go
/// through the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    /// Outside every extension and attacked by one of them.
    Zero,
    /// Outside every extension and attacked by none of them.
    WeakUndecided,
    /// In some extension but not in all.
    Credulous,
    /// In every extension.
    Skeptical,
}

impl Degree {
    pub const ALL: [Degree; 4] = [
        Degree::Zero,
        Degree::WeakUndecided,
        Degree::Credulous,
        Degree::Skeptical,
    ];

    /// Exact value as `(numerator, denominator)`.
    pub fn as_ratio(self) -> (u32, u32) {
        match self {
            Degree::Zero => (0, 1),
            Degree::WeakUndecided => (3, 10),
            Degree::Credulous => (1, 2),
            Degree::Skeptical => (1, 1),
        }
    }

    pub fn as_f64(self) -> f64 {
        let (num, den) = self.as_ratio();
        f64::from(num) / f64::from(den)
    }

    pub fn literal(self) -> &'static str {
        match self {
            Degree::Zero => "0",
            Degree::WeakUndecided => "0.3",
            Degree::Credulous => "0.5",
            Degree::Skeptical => "1",
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.literal())
    }
}

// Emitted as the bare JSON numbers 0, 0.3, 0.5 and 1.
impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::Zero => serializer.serialize_u64(0),
            Degree::Skeptical => serializer.serialize_u64(1),
            Degree::WeakUndecided => serializer.serialize_f64(0.3),
            Degree::Credulous => serializer.serialize_f64(0.5),
        }
    }
}

/// What every argument receives when a semantics yields no extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Degree 1.
    Standard,
    /// Degree 0.
    Alternative,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Standard, Convention::Alternative];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Standard => "standard",
            Convention::Alternative => "alternative",
        }
    }

    pub fn empty_degree(self) -> Degree {
        match self {
            Convention::Standard => Degree::Skeptical,
            Convention::Alternative => Degree::Zero,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "standard" => Ok(Convention::Standard),
            "alternative" => Ok(Convention::Alternative),
            other => Err(format!("unknown convention {other:?}")),
        }
    }
}

/// Degree of argument `a` given the extensions already computed for `graph`.
pub fn degree_from_extensions(
    graph: &ArgumentationGraph,
    exts: &[Extension],
    convention: Convention,
    a: usize,
) -> Degree {
    if exts.is_empty() {
        return convention.empty_degree();
    }
    let containing = exts.iter().filter(|e| e.contains(a)).count();
    if containing == exts.len() {
        Degree::Skeptical
    } else if containing > 0 {
        Degree::Credulous
    } else if exts
        .iter()
        .any(|e| !e.members().is_disjoint(graph.attackers_of(a)))
    {
        Degree::Zero
    } else {
        Degree::WeakUndecided
    }
}

pub fn degree(
    graph: &ArgumentationGraph,
    semantics: Semantics,
    convention: Convention,
    a: &ArgumentId,
) -> Result<Degree> {
    let index = graph
        .index_of(a)
        .ok_or_else(|| Error::UnknownArgument(a.to_string()))?;
    Ok(degree_from_extensions(
        graph,
        &extensions(graph, semantics),
        convention,
        index,
    ))
}

pub fn degree_table(
    graph: &ArgumentationGraph,
    semantics: Semantics,
    convention: Convention,
) -> BTreeMap<ArgumentId, Degree> {
    let exts = extensions(graph, semantics);
    graph
        .arguments()
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), degree_from_extensions(graph, &exts, convention, i)))
        .collect()
}

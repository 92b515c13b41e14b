//! Abstract argumentation: Dung semantics, complete labellings,
//! four-valued acceptability degrees, and an exhaustive checker for
//! attack removal monotonicity.
//!
//! ```
//! use argmon::{ArgumentationGraph, Semantics, extensions};
//!
//! let g = ArgumentationGraph::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
//! let preferred = extensions(&g, Semantics::Preferred);
//! assert_eq!(preferred.len(), 2);
//! ```

pub mod argset;
pub mod cli;
pub mod degrees;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod semantics;
pub mod verify;

pub use argset::ArgSet;
pub use degrees::{degree, degree_table, Convention, Degree};
pub use enumerate::{enumerate_graphs, graph_from_mask, random_graph};
pub use error::{Error, Result};
pub use graph::{ArgumentId, ArgumentationGraph, Attack};
pub use io::{parse_graph, serialize_graph, GraphFormat};
pub use semantics::{
    characteristic, complete_extensions, complete_labellings, ext2lab, extensions,
    grounded_extension, lab2ext, labellings, preferred_extensions, stable_extensions, Extension,
    Label, Labelling, Semantics,
};
pub use verify::{sweep, SweepConfig, VerificationReport, Violation, ViolationKind};

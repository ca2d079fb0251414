//! Exact computation of total domatic numbers, fractional total domatic
//! numbers and disjoint transversal numbers.
//!
//! Every integer parameter is computed by exhaustive search under an explicit
//! node budget, and every fractional parameter by an exact rational simplex
//! that emits a primal family together with a dual certificate. Running out of
//! budget is always an error, never a silently truncated answer.

pub mod batch;
pub mod bits;
pub mod certificate;
pub mod constructions;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod hypergraph;
pub mod iso;
pub mod limits;
mod partition;
pub mod scan;
pub mod search;

pub use error::{Error, Result};
pub use fractional::{Rational, WeightedFamily};
pub use graph::{Graph, MaximalOuterplanarGraph, PlaneGraph};
pub use hypergraph::Hypergraph;
pub use limits::Limits;
pub use search::PartitionCertificate;

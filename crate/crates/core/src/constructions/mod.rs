//! Constructive versions of the existence arguments: explicit families,
//! graph transformations, and the colorings and matchings they need.
//!
//! Each operation checks its own output (families through
//! [`verify_family`](crate::fractional::verify_family), partitions through
//! [`PartitionCertificate::verify_graph`](crate::PartitionCertificate::verify_graph))
//! and reports a failed check as [`Error::Invariant`](crate::Error::Invariant).

mod families;
mod kleetope;
mod outerplanar;
mod split;

pub use families::{
    clawfree_three_family, cubic_family, cycle_shift_family, pairwise_union_family, product_family, ClawFreeFamily,
};
pub use kleetope::{
    kleetope, kleetope_three_tds, kleetope_two_tds, u_construction, u_three_tds, vertex_face_matching,
};
pub use outerplanar::{mop_graph, outerplanar_two_tds, weak_dual, WeakDual};
pub use split::{four_coloring_split, odd_degree_two_tds};

use crate::error::{Error, Result};
use crate::fractional::{verify_family, Target, WeightedFamily};
use crate::graph::Graph;
use crate::search::PartitionCertificate;

fn checked_family(g: &Graph, family: WeightedFamily, what: &str) -> Result<WeightedFamily> {
    let check = verify_family(Target::Graph(g), &family);
    match check.first_invalid {
        Some((_, why)) => Err(Error::invariant(format!("{what}: {why}"))),
        None => Ok(family),
    }
}

fn checked_partition(g: &Graph, cert: PartitionCertificate, what: &str) -> Result<PartitionCertificate> {
    cert.verify_graph(g)
        .map_err(|why| Error::invariant(format!("{what}: {why}")))?;
    Ok(cert)
}

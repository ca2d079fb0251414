use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::limits::Limits;
use crate::partition::classes;
use crate::search::{coloring_search, proper_coloring, CertificateKind, ColoringGoal, PartitionCertificate};

use super::checked_partition;

fn require_triangulation(base: &PlaneGraph) -> Result<()> {
    if !base.is_triangulation() || base.graph().order() < 4 {
        return Err(Error::input("needs a triangulation on at least 4 vertices"));
    }
    Ok(())
}

/// A proper 4-coloring (colors `0..4`) in which colors `{0, 1}` and
/// `{2, 3}` each form a total dominating set, or `None` if there is none.
pub fn four_coloring_split(base: &PlaneGraph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    require_triangulation(base)?;
    coloring_search(
        base.graph(),
        4,
        ColoringGoal::TotalDominatingHalves,
        &mut limits.budget("4-coloring split search"),
    )
}

/// When every degree is odd, each link is an odd cycle and so sees three
/// colors of any proper 4-coloring; pairing up the colors gives two total
/// dominating sets.
pub fn odd_degree_two_tds(base: &PlaneGraph, limits: &Limits) -> Result<PartitionCertificate> {
    require_triangulation(base)?;
    let g = base.graph();
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v).is_multiple_of(2)) {
        return Err(Error::domain(format!("vertex {v} has even degree {}", g.degree(v))));
    }
    let colors = proper_coloring(g, 4, limits)?.ok_or_else(|| Error::invariant("no proper 4-coloring found"))?;
    let halves: Vec<usize> = colors.iter().map(|c| c / 2).collect();
    let cert = PartitionCertificate::new(CertificateKind::TotalDominating, classes(&halves, 2), g.order());
    checked_partition(g, cert, "odd degree split")
}

//! Two-colorings with no monochromatic edge.

use super::transversal::reduced_edges;
use super::Hypergraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition;

/// Two transversals obtained from a 2-coloring of `H - e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostTwoColoring {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Index of the removed edge, the first edge containing `v`.
    pub removed_edge: usize,
    /// Set when `e` came out monochromatic and `v` was added to the other
    /// class, so that `v` lies in both.
    pub shared: Option<usize>,
}

impl Hypergraph {
    /// A coloring `0/1` of the vertices with both colors on every edge, or
    /// `None` if there is none.
    pub fn find_2_coloring(&self, limits: &Limits) -> Result<Option<Vec<usize>>> {
        let edges = reduced_edges(&self.edge_masks("2-coloring search")?);
        let mut budget = limits.budget("2-coloring search");
        partition::partition_meeting_all(self.n, &edges, 2, &mut budget)
    }

    /// For a connected 3-regular 3-uniform hypergraph and a vertex `v`:
    /// removes the first edge `e` containing `v`, 2-colors the rest, and if
    /// `e` is monochromatic puts `v` in both classes. Both classes are then
    /// transversals of the whole hypergraph.
    ///
    /// A 2-coloring of all of `H` is preferred when one exists, so the
    /// exemption is used only when it is needed.
    pub fn almost_2_coloring(&self, v: usize, limits: &Limits) -> Result<AlmostTwoColoring> {
        if v >= self.n {
            return Err(Error::input(format!("vertex {v} outside 0..{}", self.n)));
        }
        if self.uniformity() != Some(3) || self.regularity() != Some(3) {
            return Err(Error::domain("almost 2-coloring needs a 3-regular 3-uniform hypergraph"));
        }
        if self.components().len() != 1 {
            return Err(Error::domain("almost 2-coloring needs a connected hypergraph"));
        }
        let removed_edge = self
            .edges
            .iter()
            .position(|e| e.contains(&v))
            .expect("every vertex has degree 3");
        let colors = match self.find_2_coloring(limits)? {
            Some(c) => c,
            None => {
                let rest: Vec<_> = self
                    .edge_masks("2-coloring search")?
                    .into_iter()
                    .enumerate()
                    .filter(|&(i, _)| i != removed_edge)
                    .map(|(_, m)| m)
                    .collect();
                let mut budget = limits.budget("2-coloring search");
                partition::partition_meeting_all(self.n, &reduced_edges(&rest), 2, &mut budget)?
                    .ok_or_else(|| {
                        Error::invariant(format!(
                            "no 2-coloring of the hypergraph without edge {removed_edge}"
                        ))
                    })?
            }
        };
        let mut classes = partition::classes(&colors, 2);
        let e = &self.edges[removed_edge];
        let mut shared = None;
        if e.iter().all(|&u| colors[u] == colors[e[0]]) {
            let other = 1 - colors[v];
            classes[other].push(v);
            classes[other].sort_unstable();
            shared = Some(v);
        }
        let [a, b]: [Vec<usize>; 2] = classes.try_into().expect("two classes");
        if !self.is_transversal(&a) || !self.is_transversal(&b) {
            return Err(Error::invariant("almost 2-coloring classes are not transversals"));
        }
        Ok(AlmostTwoColoring {
            a,
            b,
            removed_edge,
            shared,
        })
    }
}

#[cfg(test)]
/// Whether some edge is monochromatic under `colors`.
pub(crate) fn has_monochromatic_edge(h: &Hypergraph, colors: &[usize]) -> bool {
    h.edges.iter().any(|e| e.iter().all(|&u| colors[u] == colors[e[0]]))
}

//! Transversals: minimum, minimum weight, all minimal, and disjoint ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Hypergraph;
use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fractional::Rational;
use crate::limits::{Budget, Limits};
use crate::partition;

/// Distinct inclusion-minimal edges, smallest first. A set meets every edge
/// iff it meets these, so all transversal questions can use them instead.
pub(crate) fn reduced_edges(edges: &[Mask]) -> Vec<Mask> {
    let mut es = edges.to_vec();
    es.sort_by_key(|&e| (bits::count(e), e));
    es.dedup();
    let mut out: Vec<Mask> = Vec::with_capacity(es.len());
    for e in es {
        if !out.iter().any(|&f| f & e == f) {
            out.push(e);
        }
    }
    out
}

/// Uncovered edge with the fewest still-available vertices, restricted to
/// those vertices. `None` when everything is covered; `Some(0)` means dead.
fn branch_edge(edges: &[Mask], chosen: Mask, excluded: Mask) -> Option<Mask> {
    edges
        .iter()
        .filter(|&&e| e & chosen == 0)
        .map(|&e| e & !excluded)
        .min_by_key(|&e| bits::count(e))
}

/// Greedy packing of uncovered edges that are pairwise disjoint on the
/// available vertices; any completion needs one vertex from each.
fn packing(edges: &[Mask], chosen: Mask, excluded: Mask) -> Vec<Mask> {
    let mut used: Mask = 0;
    let mut out = Vec::new();
    for &e in edges {
        let e = e & !excluded;
        if e & chosen == 0 && e & used == 0 {
            used |= e;
            out.push(e);
        }
    }
    out
}

impl Hypergraph {
    /// Whether `s` meets every edge.
    pub fn is_transversal(&self, s: &[usize]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|v| s.contains(v)))
    }

    /// `τ(H)` with a minimum transversal, by branch and bound on the smallest
    /// uncovered edge.
    pub fn transversal_number(&self, limits: &Limits) -> Result<(usize, Vec<usize>)> {
        let edges = reduced_edges(&self.edge_masks("transversal search")?);
        let mut budget = limits.budget("transversal search");
        // start from the greedy bound of taking every vertex
        let mut best = (self.n + 1, bits::full(self.n));
        tau_rec(&edges, 0, 0, &mut best, &mut budget)?;
        Ok((best.0, bits::to_vec(best.1)))
    }

    /// A transversal of least total weight. Weights must be nonnegative.
    pub fn min_weight_transversal(&self, weights: &[Rational], limits: &Limits) -> Result<(Rational, Vec<usize>)> {
        if weights.len() != self.n {
            return Err(Error::input(format!("{} weights for {} vertices", weights.len(), self.n)));
        }
        if weights.iter().any(Signed::is_negative) {
            return Err(Error::input("weights must be nonnegative"));
        }
        let edges = reduced_edges(&self.edge_masks("weighted transversal search")?);
        // scale to integers over a common denominator
        let den = weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let w: Vec<BigInt> = weights.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let mut search = Weighted {
            edges: &edges,
            w: &w,
            best: None,
            budget: limits.budget("weighted transversal search"),
        };
        search.rec(0, 0, BigInt::zero())?;
        let (cost, set) = search.best.expect("the full vertex set is a transversal");
        Ok((Rational::new(cost, den), bits::to_vec(set)))
    }

    /// Every inclusion-minimal transversal, each as a sorted vertex list, in
    /// lexicographic order.
    ///
    /// Branching picks an uncovered edge and tries its vertices in turn,
    /// excluding the ones already tried, so each minimal transversal is
    /// reached on exactly one path. A branch dies as soon as a chosen vertex
    /// is no longer the sole chosen vertex of some edge, since adding
    /// vertices can never restore that.
    pub fn minimal_transversals(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let (out, status) = self.enumerate_minimal(limits);
        status.map(|()| out)
    }

    /// Like [`Hypergraph::minimal_transversals`], but on failure also hands
    /// back what was enumerated before the cap was hit.
    pub(crate) fn enumerate_minimal(&self, limits: &Limits) -> (Vec<Vec<usize>>, Result<()>) {
        let edges = match self.edge_masks("minimal transversal enumeration") {
            Ok(es) => reduced_edges(&es),
            Err(e) => return (Vec::new(), Err(e)),
        };
        let mut e = Enumerator {
            edges: &edges,
            out: Vec::new(),
            cap: limits.max_columns,
            budget: limits.budget("minimal transversal enumeration"),
        };
        let status = e.rec(0, 0);
        let mut out: Vec<Vec<usize>> = e.out.into_iter().map(bits::to_vec).collect();
        out.sort();
        (out, status)
    }

    /// `disj_τ(H)` with a witness partition of the vertices into that many
    /// transversals.
    ///
    /// Disjoint transversals extend to a partition of `V` into transversals
    /// by adding the unused vertices to any one of them, so the search is over
    /// partitions.
    pub fn disjoint_transversal_number(&self, limits: &Limits) -> Result<(usize, Vec<Vec<usize>>)> {
        if self.edges.is_empty() {
            return Err(Error::domain("without edges every set is a transversal"));
        }
        let edges = reduced_edges(&self.edge_masks("disjoint transversal search")?);
        let (tau, _) = self.transversal_number(limits)?;
        let upper = (self.n / tau).min(bits::count(edges[0]));
        let mut budget = limits.budget("disjoint transversal search");
        let mut best = vec![(0..self.n).collect::<Vec<_>>()];
        for k in 2..=upper {
            match partition::partition_meeting_all(self.n, &edges, k, &mut budget)? {
                Some(colors) => best = partition::classes(&colors, k),
                None => break,
            }
        }
        Ok((best.len(), best))
    }
}

fn tau_rec(edges: &[Mask], chosen: Mask, excluded: Mask, best: &mut (usize, Mask), budget: &mut Budget) -> Result<()> {
    budget.tick()?;
    let size = bits::count(chosen);
    let Some(e) = branch_edge(edges, chosen, excluded) else {
        if size < best.0 {
            *best = (size, chosen);
        }
        return Ok(());
    };
    if size + packing(edges, chosen, excluded).len() >= best.0 {
        return Ok(());
    }
    let mut tried = excluded;
    for v in bits::iter(e) {
        tau_rec(edges, chosen | bits::bit(v), tried, best, budget)?;
        tried |= bits::bit(v);
    }
    Ok(())
}

struct Weighted<'a> {
    edges: &'a [Mask],
    w: &'a [BigInt],
    best: Option<(BigInt, Mask)>,
    budget: Budget,
}

impl Weighted<'_> {
    fn rec(&mut self, chosen: Mask, excluded: Mask, cost: BigInt) -> Result<()> {
        self.budget.tick()?;
        let Some(e) = branch_edge(self.edges, chosen, excluded) else {
            if self.best.as_ref().is_none_or(|(b, _)| cost < *b) {
                self.best = Some((cost, chosen));
            }
            return Ok(());
        };
        if let Some((b, _)) = &self.best {
            let bound: BigInt = packing(self.edges, chosen, excluded)
                .into_iter()
                .map(|p| bits::iter(p).map(|v| &self.w[v]).min().cloned().unwrap_or_default())
                .sum();
            if &cost + bound >= *b {
                return Ok(());
            }
        }
        // cheapest vertices first so good solutions are found early
        let mut vs = bits::to_vec(e);
        vs.sort_by(|&a, &b| self.w[a].cmp(&self.w[b]).then(a.cmp(&b)));
        let mut tried = excluded;
        for v in vs {
            self.rec(chosen | bits::bit(v), tried, &cost + &self.w[v])?;
            tried |= bits::bit(v);
        }
        Ok(())
    }
}

struct Enumerator<'a> {
    edges: &'a [Mask],
    out: Vec<Mask>,
    cap: usize,
    budget: Budget,
}

impl Enumerator<'_> {
    fn every_member_critical(&self, chosen: Mask) -> bool {
        let mut critical: Mask = 0;
        for &e in self.edges {
            let hit = e & chosen;
            if hit != 0 && hit & (hit - 1) == 0 {
                critical |= hit;
            }
        }
        critical == chosen
    }

    fn rec(&mut self, chosen: Mask, excluded: Mask) -> Result<()> {
        self.budget.tick()?;
        let Some(e) = branch_edge(self.edges, chosen, excluded) else {
            if self.out.len() == self.cap {
                return Err(Error::CapExceeded {
                    what: "minimal transversal enumeration",
                    cap: self.cap as u64,
                    lower_bound: None,
                });
            }
            self.out.push(chosen);
            return Ok(());
        };
        let mut tried = excluded;
        for v in bits::iter(e) {
            let next = chosen | bits::bit(v);
            if self.every_member_critical(next) {
                self.rec(next, tried)?;
            }
            tried |= bits::bit(v);
        }
        Ok(())
    }
}

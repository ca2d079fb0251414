//! Exact integer domination parameters and the structured partitions the
//! constructions rely on.
//!
//! All "maximum number of disjoint sets" parameters are computed as the
//! largest number of classes in a partition of the vertices, which is the
//! same number because supersets of dominating sets, total dominating sets
//! and transversals keep their property.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::limits::{Budget, Limits};
use crate::partition::{self, LabelSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Dominating,
    TotalDominating,
    Transversal,
}

/// Disjoint vertex sets, each dominating, total dominating, or a transversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub kind: CertificateKind,
    pub classes: Vec<Vec<usize>>,
    /// Whether the classes partition the whole vertex set.
    pub covers_all: bool,
}

impl PartitionCertificate {
    pub(crate) fn new(kind: CertificateKind, classes: Vec<Vec<usize>>, n: usize) -> Self {
        let covered: usize = classes.iter().map(Vec::len).sum();
        PartitionCertificate {
            kind,
            classes,
            covers_all: covered == n,
        }
    }

    fn check_disjoint(&self, n: usize) -> std::result::Result<(), String> {
        let mut seen = vec![false; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                if v >= n {
                    return Err(format!("class {i} contains {v}, outside 0..{n}"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(format!("vertex {v} lies in two classes"));
                }
            }
        }
        let all = seen.iter().all(|&s| s);
        if self.covers_all != all {
            return Err(format!("covers_all is {} but the classes {} cover every vertex", self.covers_all, if all { "do" } else { "do not" }));
        }
        Ok(())
    }

    /// Checks disjointness and every class against `g`; the error names the
    /// first violation.
    pub fn verify_graph(&self, g: &Graph) -> std::result::Result<(), String> {
        self.check_disjoint(g.order())?;
        for (i, c) in self.classes.iter().enumerate() {
            let ok = match self.kind {
                CertificateKind::Dominating => is_dominating(g, c),
                CertificateKind::TotalDominating => is_total_dominating(g, c),
                CertificateKind::Transversal => {
                    return Err("a transversal certificate needs a hypergraph".into())
                }
            };
            if !ok {
                return Err(format!("class {i} is not {}", self.kind.describe()));
            }
        }
        Ok(())
    }

    pub fn verify_hypergraph(&self, h: &Hypergraph) -> std::result::Result<(), String> {
        if self.kind != CertificateKind::Transversal {
            return Err("only transversal certificates apply to hypergraphs".into());
        }
        self.check_disjoint(h.order())?;
        match self.classes.iter().position(|c| !h.is_transversal(c)) {
            Some(i) => Err(format!("class {i} is not a transversal")),
            None => Ok(()),
        }
    }
}

impl CertificateKind {
    fn describe(self) -> &'static str {
        match self {
            CertificateKind::Dominating => "dominating",
            CertificateKind::TotalDominating => "total dominating",
            CertificateKind::Transversal => "a transversal",
        }
    }
}

fn mask_of(g: &Graph, s: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    for &v in s {
        if v < g.order() {
            inside[v] = true;
        }
    }
    inside
}

/// Every vertex is in `s` or has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: &[usize]) -> bool {
    let inside = mask_of(g, s);
    (0..g.order()).all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w]))
}

/// Every vertex, members of `s` included, has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: &[usize]) -> bool {
    let inside = mask_of(g, s);
    (0..g.order()).all(|v| g.neighbors(v).iter().any(|&w| inside[w]))
}

/// `γ_t(G)` with a minimum total dominating set: the transversal number of
/// the open neighborhood hypergraph.
pub fn total_domination_number(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    g.open_neighborhood_hypergraph()?.transversal_number(limits)
}

/// `γ(G)` with a minimum dominating set.
pub fn domination_number(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    g.closed_neighborhood_hypergraph().transversal_number(limits)
}

/// Largest `k <= upper` for which `sets` admits a `k`-class partition with
/// every class meeting every set, searched upward from 2.
fn max_classes(n: usize, sets: &[Mask], upper: usize, budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
    let mut best = vec![(0..n).collect::<Vec<_>>()];
    for k in 2..=upper {
        match partition::partition_meeting_all(n, sets, k, budget)? {
            Some(colors) => best = partition::classes(&colors, k),
            None => break,
        }
    }
    Ok(best)
}

/// `dom(G)` with a partition into that many dominating sets.
pub fn domatic_number(g: &Graph, limits: &Limits) -> Result<(usize, PartitionCertificate)> {
    let n = g.order();
    let closed: Vec<Mask> = g
        .neighborhood_masks("domatic search")?
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | bits::bit(v))
        .collect();
    let upper = if n == 0 { 0 } else { g.min_degree() + 1 };
    let mut budget = limits.budget("domatic search");
    let classes = max_classes(n, &closed, upper, &mut budget)?;
    Ok((classes.len(), PartitionCertificate::new(CertificateKind::Dominating, classes, n)))
}

/// `td(G)` with a partition into that many total dominating sets.
///
/// The search tries `k = 2, 3, ...` up to `min(δ, n / γ_t)`.
pub fn total_domatic_number(g: &Graph, limits: &Limits) -> Result<(usize, PartitionCertificate)> {
    g.require_isolate_free()?;
    let n = g.order();
    let open = g.neighborhood_masks("total domatic search")?;
    let (gt, _) = total_domination_number(g, limits)?;
    let upper = g.min_degree().min(n / gt);
    let mut budget = limits.budget("total domatic search");
    let classes = max_classes(n, &open, upper, &mut budget)?;
    Ok((classes.len(), PartitionCertificate::new(CertificateKind::TotalDominating, classes, n)))
}

/// A partition into `k` total dominating sets, or `None` if there is none.
pub fn total_domatic_partition(g: &Graph, k: usize, limits: &Limits) -> Result<Option<PartitionCertificate>> {
    g.require_isolate_free()?;
    if k == 0 || k > 31 {
        return Err(Error::input(format!("number of sets must be in 1..=31, got {k}")));
    }
    let n = g.order();
    if k > g.min_degree() {
        return Ok(None);
    }
    let open = g.neighborhood_masks("total domatic search")?;
    let found = partition::partition_meeting_all(n, &open, k, &mut limits.budget("total domatic search"))?;
    Ok(found.map(|colors| {
        PartitionCertificate::new(CertificateKind::TotalDominating, partition::classes(&colors, k), n)
    }))
}

/// Whether `g` has a component that is a 5-cycle.
fn has_five_cycle_component(g: &Graph) -> bool {
    g.components()
        .iter()
        .any(|c| c.len() == 5 && c.iter().all(|&v| g.degree(v) == 2))
}

/// A partition `(R, B)` of the vertices with `R` a minimal total dominating
/// set and `B` dominating. Needs `δ >= 2`; 5-cycle components are excepted.
pub fn find_disjoint_dom_and_total_dom(g: &Graph, limits: &Limits) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.min_degree() < 2 {
        return Err(Error::domain("needs minimum degree at least 2"));
    }
    if has_five_cycle_component(g) {
        return Err(Error::Excepted("a 5-cycle has no disjoint dominating and total dominating sets".into()));
    }
    let n = g.order();
    const R: u32 = 1;
    const B: u32 = 2;
    let open = g.neighborhood_masks("dominating/total dominating split")?;
    let mut constraints: Vec<(Mask, u32)> = open.iter().map(|&m| (m, R)).collect();
    constraints.extend(open.iter().enumerate().map(|(v, &m)| (m | bits::bit(v), B)));
    let search = LabelSearch {
        n,
        labels: vec![R, B],
        constraints,
        symmetric: false,
        leftover: R,
    };
    let labels = search
        .solve(&mut limits.budget("dominating/total dominating split"))?
        .ok_or_else(|| Error::invariant("no disjoint dominating and total dominating sets"))?;
    let mut in_r: Vec<bool> = labels.iter().map(|&l| l == R).collect();
    // move vertices from R to B while R stays total dominating
    for v in 0..n {
        if !in_r[v] {
            continue;
        }
        in_r[v] = false;
        let still = (0..n).all(|u| g.neighbors(u).iter().any(|&w| in_r[w]));
        if !still {
            in_r[v] = true;
        }
    }
    let r: Vec<usize> = (0..n).filter(|&v| in_r[v]).collect();
    let b: Vec<usize> = (0..n).filter(|&v| !in_r[v]).collect();
    if !is_total_dominating(g, &r) || !is_dominating(g, &b) {
        return Err(Error::invariant("dominating/total dominating split failed verification"));
    }
    Ok((r, b))
}

/// Neighbors of `v` adjacent to no other member of `s`.
pub fn private_neighbors(g: &Graph, s: &[usize], v: usize) -> Result<Vec<usize>> {
    if !s.contains(&v) {
        return Err(Error::input(format!("vertex {v} is not in the set")));
    }
    let inside = mask_of(g, s);
    Ok(g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w).iter().all(|&u| u == v || !inside[u]))
        .collect())
}

/// `k` total dominating sets with every vertex in at most `max_load` of
/// them, or `None` if there are none.
pub fn find_k_family_max_load(g: &Graph, k: usize, max_load: usize, limits: &Limits) -> Result<Option<Vec<Vec<usize>>>> {
    g.require_isolate_free()?;
    if k == 0 || k > 16 {
        return Err(Error::input(format!("family size must be in 1..=16, got {k}")));
    }
    if max_load == 0 || max_load > k {
        return Err(Error::input(format!("load bound must be in 1..={k}, got {max_load}")));
    }
    let open = g.neighborhood_masks("bounded-load family search")?;
    let all = (1u32 << k) - 1;
    let mut labels: Vec<u32> = (0..=all).filter(|l| l.count_ones() as usize <= max_load).collect();
    labels.sort_by_key(|&l| (std::cmp::Reverse(l.count_ones()), l));
    let search = LabelSearch {
        n: g.order(),
        labels,
        constraints: open.iter().map(|&m| (m, all)).collect(),
        symmetric: true,
        leftover: 0,
    };
    let found = search.solve(&mut limits.budget("bounded-load family search"))?;
    Ok(found.map(|ls| {
        (0..k)
            .map(|c| (0..g.order()).filter(|&v| ls[v] >> c & 1 == 1).collect())
            .collect()
    }))
}

/// What a proper coloring must satisfy beyond properness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ColoringGoal {
    Proper,
    /// Four colors where `{0,1}` and `{2,3}` each form a total dominating set.
    TotalDominatingHalves,
}

/// A proper coloring with at most `k` colors.
pub fn proper_coloring(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    coloring_search(g, k, ColoringGoal::Proper, &mut limits.budget("coloring search"))
}

pub(crate) fn coloring_search(g: &Graph, k: usize, goal: ColoringGoal, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    if goal == ColoringGoal::TotalDominatingHalves {
        assert_eq!(k, 4);
        if !g.is_isolate_free() {
            return Ok(None);
        }
    }
    let mut c = Colorer {
        g,
        k,
        goal,
        color: vec![usize::MAX; g.order()],
        budget,
    };
    Ok(if c.rec(0)? { Some(c.color) } else { None })
}

struct Colorer<'a, 'b> {
    g: &'a Graph,
    k: usize,
    goal: ColoringGoal,
    color: Vec<usize>,
    budget: &'b mut Budget,
}

impl Colorer<'_, '_> {
    /// Uncolored vertex with the most distinct neighbor colors, then the
    /// highest degree, then the lowest id.
    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut seen = 0u64;
                for &w in self.g.neighbors(v) {
                    if self.color[w] != usize::MAX {
                        seen |= 1 << self.color[w];
                    }
                }
                (seen.count_ones(), self.g.degree(v), std::cmp::Reverse(v))
            })
    }

    /// Whether `v` can still see both halves.
    fn halves_possible(&self, v: usize) -> bool {
        let mut groups = 0u8;
        let mut open = 0;
        for &w in self.g.neighbors(v) {
            match self.color[w] {
                usize::MAX => open += 1,
                c => groups |= 1 << (c / 2),
            }
        }
        2 - groups.count_ones() as usize <= open
    }

    fn rec(&mut self, used: usize) -> Result<bool> {
        self.budget.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = match self.goal {
            ColoringGoal::Proper => (used + 1).min(self.k),
            // the first vertex may take color 0 up to swapping colors
            ColoringGoal::TotalDominatingHalves if used == 0 => 1,
            ColoringGoal::TotalDominatingHalves => self.k,
        };
        for c in 0..limit {
            if self.g.neighbors(v).iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            let ok = self.goal == ColoringGoal::Proper
                || std::iter::once(v)
                    .chain(self.g.neighbors(v).iter().copied())
                    .all(|w| self.halves_possible(w));
            if ok && self.rec(used.max(c + 1))? {
                return Ok(true);
            }
            self.color[v] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, heawood, path, petersen};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn predicates() {
        let c4 = cycle(4).unwrap();
        assert!(is_total_dominating(&c4, &[0, 1]));
        assert!(!is_total_dominating(&c4, &[0, 2]));
        assert!(is_dominating(&c4, &[0, 2]));
        let k5 = complete(5).unwrap();
        assert!(is_total_dominating(&k5, &[3, 4]));
        assert!(!is_total_dominating(&k5, &[3]));
        assert!(is_total_dominating(&cycle(5).unwrap(), &[0, 1, 2]));
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(total_domination_number(&cycle(8).unwrap(), &l()).unwrap().0, 4);
        assert_eq!(total_domination_number(&heawood(), &l()).unwrap().0, 6);
        for n in 2..7 {
            assert_eq!(total_domination_number(&complete(n).unwrap(), &l()).unwrap().0, 2);
            assert_eq!(domination_number(&complete(n).unwrap(), &l()).unwrap().0, 1);
        }
        assert_eq!(domination_number(&cycle(6).unwrap(), &l()).unwrap().0, 2);
        assert_eq!(domination_number(&petersen(), &l()).unwrap().0, 3);
        assert!(matches!(
            total_domination_number(&Graph::empty(3), &l()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn domatic_numbers() {
        let (d, cert) = domatic_number(&cycle(6).unwrap(), &l()).unwrap();
        assert_eq!(d, 3);
        cert.verify_graph(&cycle(6).unwrap()).unwrap();
        assert_eq!(domatic_number(&complete(5).unwrap(), &l()).unwrap().0, 5);
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(domatic_number(&g, &l()).unwrap().0, 1);
    }

    #[test]
    fn total_domatic_numbers() {
        assert_eq!(total_domatic_number(&cycle(5).unwrap(), &l()).unwrap().0, 1);
        assert_eq!(total_domatic_number(&heawood(), &l()).unwrap().0, 1);
        let (td, cert) = total_domatic_number(&cycle(8).unwrap(), &l()).unwrap();
        assert_eq!(td, 2);
        assert!(cert.covers_all);
        cert.verify_graph(&cycle(8).unwrap()).unwrap();
        assert_eq!(total_domatic_number(&complete(6).unwrap(), &l()).unwrap().0, 3);
    }

    #[test]
    fn dom_and_total_dom_split() {
        for g in [cycle(6).unwrap(), complete(4).unwrap(), petersen(), heawood()] {
            let (r, b) = find_disjoint_dom_and_total_dom(&g, &l()).unwrap();
            assert!(is_total_dominating(&g, &r) && is_dominating(&g, &b));
            assert_eq!(r.len() + b.len(), g.order());
            for &v in &r {
                let rest: Vec<usize> = r.iter().copied().filter(|&u| u != v).collect();
                assert!(!is_total_dominating(&g, &rest));
            }
        }
        assert!(matches!(
            find_disjoint_dom_and_total_dom(&cycle(5).unwrap(), &l()),
            Err(Error::Excepted(_))
        ));
    }

    #[test]
    fn private_neighbor_sets() {
        let p3 = path(3);
        assert_eq!(private_neighbors(&p3, &[1], 1).unwrap(), vec![0, 2]);
        // 1 is itself in the set but has no other neighbor in it
        assert_eq!(private_neighbors(&cycle(4).unwrap(), &[0, 1], 0).unwrap(), vec![1, 3]);
        assert!(private_neighbors(&p3, &[1], 0).is_err());
    }

    #[test]
    fn bounded_load_families() {
        let c4 = cycle(4).unwrap();
        let f = find_k_family_max_load(&c4, 2, 1, &l()).unwrap().unwrap();
        assert!(f.iter().all(|s| is_total_dominating(&c4, s)));
        assert!(find_k_family_max_load(&cycle(5).unwrap(), 4, 2, &l()).unwrap().is_none());
        let p = petersen();
        let f = find_k_family_max_load(&p, 4, 2, &l()).unwrap().unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|s| is_total_dominating(&p, s)));
        for v in 0..10 {
            assert!(f.iter().filter(|s| s.contains(&v)).count() <= 2);
        }
    }

    #[test]
    fn colorings() {
        assert!(proper_coloring(&complete(4).unwrap(), 3, &l()).unwrap().is_none());
        let c = proper_coloring(&petersen(), 3, &l()).unwrap().unwrap();
        assert!(petersen().edges().all(|(u, v)| c[u] != c[v]));
        assert!(proper_coloring(&cycle(5).unwrap(), 2, &l()).unwrap().is_none());
    }
}

//! Simple undirected graphs over dense vertex ids `0..n`.

mod generators;
mod graph6;
mod outerplanar;
mod plane;
pub(crate) mod text;

pub use generators::*;
pub use graph6::{encode_graph6, parse_graph6};
pub use outerplanar::MaximalOuterplanarGraph;
pub use plane::PlaneGraph;
pub use text::{format_edge_list, parse_edge_list};

use num_bigint::BigInt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::fractional::Rational;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted neighbor lists.
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::input(format!("duplicate edge {v}-{dup}")));
            }
        }
        Ok(Graph { n, adj, m })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// A copy with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `2m/n` exactly.
    pub fn average_degree(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(Error::domain("average degree of the empty graph"));
        }
        Ok(Rational::new(
            BigInt::from(2 * self.m),
            BigInt::from(self.n),
        ))
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|ns| !ns.is_empty())
    }

    pub(crate) fn require_isolate_free(&self) -> Result<()> {
        match self.adj.iter().position(Vec::is_empty) {
            Some(v) => Err(Error::domain(format!("vertex {v} is isolated"))),
            None => Ok(()),
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![];
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring by BFS, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        for ns in &self.adj {
            let d = ns.len();
            for i in 0..d {
                for j in i + 1..d {
                    if self.has_edge(ns[i], ns[j]) {
                        continue;
                    }
                    for k in j + 1..d {
                        if !self.has_edge(ns[i], ns[k]) && !self.has_edge(ns[j], ns[k]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Induced subgraph on `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    pub(crate) fn neighborhood_masks(&self, what: &'static str) -> Result<Vec<Mask>> {
        bits::ensure_fits(what, self.n)?;
        Ok(self.adj.iter().map(|ns| bits::from_slice(ns)).collect())
    }

    /// The hypergraph on `V(G)` whose edges are the open neighborhoods, one
    /// per vertex in vertex order (repeats are kept).
    pub fn open_neighborhood_hypergraph(&self) -> Result<Hypergraph> {
        self.require_isolate_free()?;
        Hypergraph::new(self.n, self.adj.clone())
    }

    /// Closed neighborhoods `N[v]` as a hypergraph; its transversals are the
    /// dominating sets.
    pub fn closed_neighborhood_hypergraph(&self) -> Hypergraph {
        let edges = (0..self.n)
            .map(|v| {
                let mut e = self.adj[v].clone();
                e.push(v);
                e.sort_unstable();
                e
            })
            .collect();
        Hypergraph::new(self.n, edges).expect("closed neighborhoods are nonempty")
    }

    /// Every edge subdivided once. Original vertices keep their ids and the
    /// subdivision vertices follow in lexicographic edge order.
    pub fn subdivision(&self) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .enumerate()
            .flat_map(|(i, (u, v))| [(u, self.n + i), (v, self.n + i)])
            .collect();
        Graph::from_edges(self.n + self.m, edges).expect("subdivision is simple")
    }
}

/// `G1 + G2` with the vertices of `G2` shifted by `n(G1)`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let shift = g1.order();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(g1.order() + g2.order(), edges).expect("union of simple graphs")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, [(0, 0)]), Err(Error::Input(_))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::Input(_))));
    }

    #[test]
    fn disjoint_unions() {
        let k2 = complete(2).unwrap();
        let u = disjoint_union(&k2, &k2);
        assert_eq!((u.order(), u.size()), (4, 2));
        let u = disjoint_union(&cycle(4).unwrap(), &cycle(6).unwrap());
        assert_eq!((u.order(), u.size(), u.components().len()), (10, 10, 2));
    }

    #[test]
    fn open_neighborhoods() {
        let h = cycle(4).unwrap().open_neighborhood_hypergraph().unwrap();
        assert_eq!(
            h.edges(),
            &[vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]]
        );
        let h = complete(3).unwrap().open_neighborhood_hypergraph().unwrap();
        assert_eq!(h.edges(), &[vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert!(matches!(
            Graph::empty(2).open_neighborhood_hypergraph(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn subdivisions() {
        let s = complete(3).unwrap().subdivision();
        assert!(crate::iso::are_isomorphic(&s, &cycle(6).unwrap()));
        let s = complete(4).unwrap().subdivision();
        assert_eq!((s.order(), s.size()), (10, 12));
        let side = s.bipartition().unwrap();
        assert!((0..4).all(|v| side[v] == side[0]));
        assert!((4..10).all(|v| side[v] != side[0]));
    }

    #[test]
    fn structural_predicates() {
        assert!(!star(3).unwrap().is_claw_free());
        assert!(star(2).unwrap().is_claw_free());
        for n in 3..12 {
            assert!(cycle(n).unwrap().is_claw_free());
        }
        assert_eq!(Graph::empty(0).average_degree().ok(), None);
        assert_eq!(
            petersen().average_degree().unwrap(),
            Rational::from_integer(3.into())
        );
        assert_eq!(petersen().girth(), Some(5));
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
    }
}

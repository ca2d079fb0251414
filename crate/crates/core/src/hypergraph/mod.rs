//! Hypergraphs over dense vertex ids, with edge lists kept in input order.

mod coloring;
mod transversal;

pub use coloring::AlmostTwoColoring;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::text::{parse_ids, parse_order_line, strip_comment};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    /// Each edge sorted and free of repeats; the list itself may repeat.
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::input(format!("edge {i} is empty")));
            }
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::input(format!("edge {i} contains {v}, outside 0..{n}")));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// `Some(d)` when every vertex lies in exactly `d` edges.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub(crate) fn edge_masks(&self, what: &'static str) -> Result<Vec<Mask>> {
        bits::ensure_fits(what, self.n)?;
        Ok(self.edges.iter().map(|e| bits::from_slice(e)).collect())
    }

    /// The seven lines of the Fano plane on points `0..7`.
    pub fn fano() -> Self {
        let lines = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).expect("fano lines are valid")
    }

    /// All `k`-subsets of `0..n` in lexicographic order.
    pub fn complete_uniform(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::input(format!("complete uniform hypergraph needs 1 <= k <= n, got n={n}, k={k}")));
        }
        let mut edges = Vec::new();
        let mut cur = Vec::with_capacity(k);
        subsets(n, k, 0, &mut cur, &mut edges);
        Hypergraph::new(n, edges)
    }

    /// Bipartite graph with vertex `i` joined to `n + j` when `i` is in
    /// edge `j`.
    pub fn incidence_graph(&self) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(j, e)| e.iter().map(move |&i| (i, self.n + j)));
        Graph::from_edges(self.n + self.edges.len(), edges).expect("incidence graph is simple")
    }

    /// Connected components under vertex-edge incidence. Each comes with
    /// the original ids of its vertices (`back[new] = old`); components are
    /// ordered by smallest original vertex and keep the relative edge order.
    pub fn components(&self) -> Vec<(Hypergraph, Vec<usize>)> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comp_of = vec![usize::MAX; self.n];
        let mut backs: Vec<Vec<usize>> = Vec::new();
        let mut root_comp = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if root_comp[r] == usize::MAX {
                root_comp[r] = backs.len();
                backs.push(Vec::new());
            }
            comp_of[v] = root_comp[r];
            backs[root_comp[r]].push(v);
        }
        let mut local = vec![0; self.n];
        for back in &backs {
            for (i, &v) in back.iter().enumerate() {
                local[v] = i;
            }
        }
        let mut edges: Vec<Vec<Vec<usize>>> = vec![Vec::new(); backs.len()];
        for e in &self.edges {
            edges[comp_of[e[0]]].push(e.iter().map(|&v| local[v]).collect());
        }
        backs
            .into_iter()
            .zip(edges)
            .map(|(back, es)| (Hypergraph::new(back.len(), es).expect("relabelled component"), back))
            .collect()
    }

    /// `n <count>` then one edge per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if n.is_none() {
                n = Some(
                    parse_order_line(line, lineno)?
                        .ok_or_else(|| Error::text(lineno, "expected `n <count>` first"))?,
                );
                continue;
            }
            let ids = parse_ids(line, lineno)?;
            let count = n.unwrap();
            if let Some(&v) = ids.iter().find(|&&v| v >= count) {
                return Err(Error::text(lineno, format!("vertex {v} >= declared n = {count}")));
            }
            edges.push(ids);
        }
        let n = n.ok_or_else(|| Error::input("missing `n <count>` line"))?;
        Hypergraph::new(n, edges)
    }

    pub fn format(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for e in &self.edges {
            let ids: Vec<String> = e.iter().map(usize::to_string).collect();
            s.push_str(&ids.join(" "));
            s.push('\n');
        }
        s
    }
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for v in start..=n - (k - cur.len()) {
        cur.push(v);
        subsets(n, k, v + 1, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{heawood, path};
    use crate::iso::{are_isomorphic, hypergraphs_isomorphic};

    #[test]
    fn fano_shape() {
        let f = Hypergraph::fano();
        assert_eq!(f.uniformity(), Some(3));
        assert_eq!(f.regularity(), Some(3));
        for (i, a) in f.edges().iter().enumerate() {
            for b in &f.edges()[i + 1..] {
                assert_eq!(a.iter().filter(|v| b.contains(v)).count(), 1);
            }
        }
    }

    #[test]
    fn incidence_graphs() {
        assert!(are_isomorphic(&Hypergraph::fano().incidence_graph(), &heawood()));
        let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert!(are_isomorphic(&single.incidence_graph(), &path(3)));
    }

    #[test]
    fn heawood_neighborhoods_are_two_fano_planes() {
        let comps = heawood().open_neighborhood_hypergraph().unwrap().components();
        assert_eq!(comps.len(), 2);
        for (h, back) in &comps {
            assert_eq!((h.order(), h.edges().len()), (7, 7));
            assert_eq!(back.len(), 7);
            assert!(hypergraphs_isomorphic(h, &Hypergraph::fano()));
        }
    }

    #[test]
    fn components_of_disjoint_triangles() {
        let h = Hypergraph::new(6, vec![vec![0, 1], vec![3, 4], vec![1, 2], vec![4, 5], vec![0, 2], vec![3, 5]]).unwrap();
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].1, vec![3, 4, 5]);
        assert_eq!(comps[1].0.edges(), &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let f = Hypergraph::fano();
        assert_eq!(f.components(), vec![(f.clone(), (0..7).collect())]);
    }

    #[test]
    fn complete_uniform_and_text() {
        assert_eq!(Hypergraph::complete_uniform(5, 3).unwrap().edges().len(), 10);
        assert_eq!(
            Hypergraph::complete_uniform(3, 2).unwrap().edges(),
            &[vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert!(Hypergraph::complete_uniform(3, 4).is_err());
        assert!(Hypergraph::complete_uniform(3, 0).is_err());
        let f = Hypergraph::fano();
        assert_eq!(Hypergraph::parse(&f.format()).unwrap(), f);
        assert!(Hypergraph::parse("n 3\n0 3").is_err());
        assert!(Hypergraph::new(2, vec![vec![]]).is_err());
    }
}

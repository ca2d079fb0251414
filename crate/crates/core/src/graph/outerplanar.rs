use rand::Rng;

use super::text::{parse_ids, parse_order_line, strip_comment};
use super::Graph;
use crate::error::{Error, Result};

/// A triangulated polygon: the outer cycle is `0, 1, ..., n-1, 0` and the
/// chords split its interior into `n - 2` triangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaximalOuterplanarGraph {
    n: usize,
    /// Sorted, each as `(u, v)` with `u < v`.
    chords: Vec<(usize, usize)>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl MaximalOuterplanarGraph {
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::input(format!("a triangulated polygon needs n >= 3, got {n}")));
        }
        let mut cs: Vec<(usize, usize)> = chords.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        cs.sort_unstable();
        for &(u, v) in &cs {
            if v >= n {
                return Err(Error::input(format!("chord {u}-{v} outside 0..{n}")));
            }
            if v - u <= 1 || (u == 0 && v == n - 1) {
                return Err(Error::input(format!("{u}-{v} is not a chord of the {n}-gon")));
            }
        }
        if let Some(w) = cs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate chord {}-{}", w[0].0, w[0].1)));
        }
        if cs.len() != n - 3 {
            return Err(Error::input(format!(
                "a triangulated {n}-gon has {} chords, got {}",
                n - 3,
                cs.len()
            )));
        }
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                if crosses(cs[i], cs[j]) {
                    return Err(Error::input(format!(
                        "chords {}-{} and {}-{} cross",
                        cs[i].0, cs[i].1, cs[j].0, cs[j].1
                    )));
                }
            }
        }
        Ok(MaximalOuterplanarGraph { n, chords: cs })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let outer = (0..n).map(|i| (i, (i + 1) % n));
        Graph::from_edges(n, outer.chain(self.chords.iter().copied()))
            .expect("validated polygon triangulation")
    }

    /// The `n - 2` bounded faces as sorted triples, in lexicographic order.
    /// Every triangle of a maximal outerplanar graph bounds a face.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let g = self.to_graph();
        let mut out = Vec::with_capacity(self.n - 2);
        for (a, b) in g.edges() {
            for &c in g.neighbors(b) {
                if c > b && g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Cycle distance between two vertices of the outer cycle.
    pub fn cycle_distance(&self, u: usize, v: usize) -> usize {
        let d = u.abs_diff(v);
        d.min(self.n - d)
    }

    /// All chords from vertex 0.
    pub fn fan(n: usize) -> Result<Self> {
        MaximalOuterplanarGraph::new(n, (2..n.saturating_sub(1)).map(|i| (0, i)))
    }

    /// A random triangulation of the `n`-gon, built by recursively cutting
    /// off a random triangle on the side `p[0] p[last]`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n < 3 {
            return Err(Error::input(format!("a triangulated polygon needs n >= 3, got {n}")));
        }
        let mut chords = Vec::new();
        let mut stack = vec![(0..n).collect::<Vec<_>>()];
        while let Some(p) = stack.pop() {
            if p.len() < 3 {
                continue;
            }
            let k = rng.gen_range(1..p.len() - 1);
            split(&p, k, &mut chords, &mut stack);
        }
        MaximalOuterplanarGraph::new(n, chords)
    }

    /// Every triangulation of the `n`-gon (a Catalan number of them), in a
    /// deterministic order.
    pub fn enumerate_all(n: usize) -> Result<Vec<Self>> {
        if n < 3 {
            return Err(Error::input(format!("a triangulated polygon needs n >= 3, got {n}")));
        }
        let mut out = Vec::new();
        for chords in all_chord_sets(&(0..n).collect::<Vec<_>>()) {
            out.push(MaximalOuterplanarGraph::new(n, chords)?);
        }
        Ok(out)
    }

    /// `n <count>` followed by one chord `u v` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut chords = Vec::new();
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
            let [u, v] = ids[..] else {
                return Err(Error::text(lineno, "expected a chord `u v`"));
            };
            chords.push((u, v));
        }
        let n = n.ok_or_else(|| Error::input("missing `n <count>` line"))?;
        MaximalOuterplanarGraph::new(n, chords)
    }

    pub fn format(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for &(u, v) in &self.chords {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn split(p: &[usize], k: usize, chords: &mut Vec<(usize, usize)>, stack: &mut Vec<Vec<usize>>) {
    let last = p.len() - 1;
    if k > 1 {
        chords.push((p[0], p[k]));
    }
    if k < last - 1 {
        chords.push((p[k], p[last]));
    }
    stack.push(p[..=k].to_vec());
    stack.push(p[k..].to_vec());
}

fn all_chord_sets(p: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if p.len() < 3 {
        return vec![Vec::new()];
    }
    let last = p.len() - 1;
    let mut out = Vec::new();
    for k in 1..last {
        let mut base = Vec::new();
        if k > 1 {
            base.push((p[0], p[k]));
        }
        if k < last - 1 {
            base.push((p[k], p[last]));
        }
        let left = all_chord_sets(&p[..=k]);
        let right = all_chord_sets(&p[k..]);
        for l in &left {
            for r in &right {
                let mut cs = base.clone();
                cs.extend_from_slice(l);
                cs.extend_from_slice(r);
                out.push(cs);
            }
        }
    }
    out
}

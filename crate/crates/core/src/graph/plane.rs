use std::collections::HashMap;

use super::text::{parse_ids, parse_order_line, strip_comment};
use super::Graph;
use crate::error::{Error, Result};

/// A graph with an explicit face list.
///
/// Faces are closed walks given as cyclic vertex sequences. Every edge lies on
/// exactly two face boundaries (an edge walked twice by one face counts
/// twice). The face list is taken as given and never recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    faces: Vec<Vec<usize>>,
    outer: Option<usize>,
}

impl PlaneGraph {
    pub fn new(graph: Graph, faces: Vec<Vec<usize>>, outer: Option<usize>) -> Result<Self> {
        let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::input(format!("face {fi} has fewer than 3 vertices")));
            }
            for i in 0..face.len() {
                let (u, v) = (face[i], face[(i + 1) % face.len()]);
                if !graph.has_edge(u, v) {
                    return Err(Error::input(format!(
                        "face {fi} walks {u}-{v}, which is not an edge"
                    )));
                }
                *uses.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
        for (u, v) in graph.edges() {
            let k = uses.get(&(u, v)).copied().unwrap_or(0);
            if k != 2 {
                return Err(Error::input(format!(
                    "edge {u}-{v} lies on {k} face boundaries, expected 2"
                )));
            }
        }
        if let Some(o) = outer {
            if o >= faces.len() {
                return Err(Error::input(format!("outer face index {o} out of range")));
            }
        }
        Ok(PlaneGraph { graph, faces, outer })
    }

    /// Builds the graph from the face boundaries themselves.
    pub fn from_faces(n: usize, faces: Vec<Vec<usize>>, outer: Option<usize>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()])))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let graph = Graph::from_edges(n, edges)?;
        PlaneGraph::new(graph, faces, outer)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer
    }

    /// Every face is a triangle on three distinct vertices.
    pub fn is_triangulation(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.len() == 3 && f[0] != f[1] && f[1] != f[2] && f[0] != f[2])
    }

    /// `n - m + f`; 2 for a connected plane graph, 0 on the torus.
    pub fn euler_characteristic(&self) -> i64 {
        self.graph.order() as i64 - self.graph.size() as i64 + self.faces.len() as i64
    }

    /// Faces incident with each vertex, in increasing face index.
    pub fn vertex_faces(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.graph.order()];
        for (fi, f) in self.faces.iter().enumerate() {
            for &v in f {
                if out[v].last() != Some(&fi) {
                    out[v].push(fi);
                }
            }
        }
        for list in &mut out {
            list.dedup();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            Head,
            Edges,
            Faces,
        }
        let mut section = Section::Head;
        let mut declared = None;
        let mut edges = Vec::new();
        let mut faces = Vec::new();
        let mut outer = None;
        let mut saw_edges = false;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match line {
                "edges" => {
                    section = Section::Edges;
                    saw_edges = true;
                    continue;
                }
                "faces" => {
                    section = Section::Faces;
                    continue;
                }
                _ => {}
            }
            if let Some(rest) = line.strip_prefix("outer") {
                let idx = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::text(lineno, "expected `outer <index>`"))?;
                outer = Some(idx);
                continue;
            }
            match section {
                Section::Head => match parse_order_line(line, lineno)? {
                    Some(n) => declared = Some(n),
                    None => return Err(Error::text(lineno, "expected `n`, `edges` or `faces`")),
                },
                Section::Edges => {
                    let ids = parse_ids(line, lineno)?;
                    let [u, v] = ids[..] else {
                        return Err(Error::text(lineno, "expected `u v`"));
                    };
                    edges.push((u, v));
                }
                Section::Faces => {
                    let ids = parse_ids(line, lineno)?;
                    if ids.len() < 3 {
                        return Err(Error::text(lineno, "a face needs at least 3 vertices"));
                    }
                    faces.push(ids);
                }
            }
        }
        let max_id = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .chain(faces.iter().flatten().copied())
            .max();
        let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
        if let Some(m) = max_id {
            if m >= n {
                return Err(Error::input(format!("vertex id {m} >= declared n = {n}")));
            }
        }
        if saw_edges {
            PlaneGraph::new(Graph::from_edges(n, edges)?, faces, outer)
        } else {
            PlaneGraph::from_faces(n, faces, outer)
        }
    }

    pub fn format(&self) -> String {
        let mut s = format!("n {}\nedges\n", self.graph.order());
        for (u, v) in self.graph.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s.push_str("faces\n");
        for f in &self.faces {
            let ids: Vec<String> = f.iter().map(usize::to_string).collect();
            s.push_str(&ids.join(" "));
            s.push('\n');
        }
        if let Some(o) = self.outer {
            s.push_str(&format!("outer {o}\n"));
        }
        s
    }
}

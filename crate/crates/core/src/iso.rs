//! Brute-force graph isomorphism for small graphs, used by tests and by
//! structural checks on constructions.

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // map vertices in BFS order so each new vertex has mapped neighbors early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, order: &[usize], i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..h.order() {
        if used[c] || h.degree(c) != g.degree(v) {
            continue;
        }
        let consistent = order[..i]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, order, i + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Hypergraphs are compared through their incidence graphs, with the vertex
/// side pinned by requiring equal vertex and edge counts.
pub fn hypergraphs_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.order() != b.order() || a.edges().len() != b.edges().len() {
        return false;
    }
    let (ia, ib) = (a.incidence_graph(), b.incidence_graph());
    match find_isomorphism(&ia, &ib) {
        None => false,
        // the incidence graph may swap sides; accept only side-preserving maps
        Some(map) if (0..a.order()).all(|v| map[v] < b.order()) => true,
        Some(_) => side_preserving(&ia, &ib, a.order()),
    }
}

fn side_preserving(ia: &Graph, ib: &Graph, n: usize) -> bool {
    // tag the vertex side with a pendant path of length 2 on each vertex
    let tag = |g: &Graph| {
        let base = g.order();
        let edges = g
            .edges()
            .chain((0..n).flat_map(|v| [(v, base + 2 * v), (base + 2 * v, base + 2 * v + 1)]));
        Graph::from_edges(base + 2 * n, edges).expect("tagging keeps the graph simple")
    };
    are_isomorphic(&tag(ia), &tag(ib))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, petersen};

    #[test]
    fn basics() {
        let c6 = cycle(6).unwrap();
        let shuffled = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let map = find_isomorphism(&c6, &shuffled).unwrap();
        for (u, v) in c6.edges() {
            assert!(shuffled.has_edge(map[u], map[v]));
        }
        assert!(!are_isomorphic(&c6, &complete_bipartite(3, 3)));
        assert!(are_isomorphic(&petersen(), &petersen()));
    }
}

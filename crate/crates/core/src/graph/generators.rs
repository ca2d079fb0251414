//! Named graphs and plane graphs.

use rand::Rng;

use super::{Graph, PlaneGraph};
use crate::error::{Error, Result};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .expect("complete bipartite is simple")
}

/// `K_{1,k}` with the center at vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("star needs k >= 1"));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| {
        [
            (i, (i + 1) % 5),
            (i, i + 5),
            (5 + i, 5 + (i + 2) % 5),
        ]
    });
    Graph::from_edges(10, edges).expect("petersen is simple")
}

/// The Heawood graph from LCF notation `[5,-5]^7`.
pub fn heawood() -> Graph {
    let edges = (0..14).flat_map(|i| {
        let chord = if i % 2 == 0 { (i + 5) % 14 } else { (i + 9) % 14 };
        let mut es = vec![(i, (i + 1) % 14)];
        if i < chord {
            es.push((i, chord));
        }
        es
    });
    Graph::from_edges(14, edges).expect("heawood is simple")
}

/// Triangular prism `C_3 x K_2`.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .expect("prism is simple")
}

pub fn tetrahedron_plane() -> PlaneGraph {
    PlaneGraph::from_faces(
        4,
        vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]],
        None,
    )
    .expect("tetrahedron faces are valid")
}

/// Apexes 0 and 5 over the square `1 2 3 4`.
pub fn octahedron_plane() -> PlaneGraph {
    let ring = [1, 2, 3, 4];
    let faces = (0..4)
        .flat_map(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % 4]);
            [vec![0, a, b], vec![5, b, a]]
        })
        .collect();
    PlaneGraph::from_faces(6, faces, None).expect("octahedron faces are valid")
}

/// Bottom square `0 1 2 3`, top square `4 5 6 7`.
pub fn cube_plane() -> PlaneGraph {
    let mut faces = vec![vec![0, 3, 2, 1], vec![4, 5, 6, 7]];
    for i in 0..4 {
        let j = (i + 1) % 4;
        faces.push(vec![i, j, j + 4, i + 4]);
    }
    PlaneGraph::from_faces(8, faces, None).expect("cube faces are valid")
}

/// Top 0, upper ring 1..=5, lower ring 6..=10, bottom 11.
pub fn icosahedron_plane() -> PlaneGraph {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i + 1), up(i), lo(i)]);
        faces.push(vec![lo(i), lo(i + 1), up(i + 1)]);
        faces.push(vec![11, lo(i + 1), lo(i)]);
    }
    PlaneGraph::from_faces(12, faces, None).expect("icosahedron faces are valid")
}

pub fn icosahedron() -> Graph {
    icosahedron_plane().graph().clone()
}

/// The truncated tetrahedron with a vertex added inside each hexagonal face,
/// joined to the six boundary vertices. Order 16, a planar triangulation.
///
/// Truncation vertex `(a, b)` (near corner `a`, toward `b`) has id
/// `3a + rank of b among the other three corners`; the apex of the hexagon
/// opposite corner `d` has id `12 + d`.
pub fn apexed_truncated_tetrahedron() -> PlaneGraph {
    let id = |a: usize, b: usize| 3 * a + if b < a { b } else { b - 1 };
    let mut faces = Vec::new();
    for a in 0..4 {
        let others: Vec<usize> = (0..4).filter(|&b| b != a).collect();
        faces.push(others.iter().map(|&b| id(a, b)).collect());
    }
    for d in 0..4 {
        let corners: Vec<usize> = (0..4).filter(|&c| c != d).collect();
        let (a, b, c) = (corners[0], corners[1], corners[2]);
        let hexagon = [id(a, b), id(b, a), id(b, c), id(c, b), id(c, a), id(a, c)];
        for i in 0..6 {
            faces.push(vec![hexagon[i], hexagon[(i + 1) % 6], 12 + d]);
        }
    }
    PlaneGraph::from_faces(16, faces, None).expect("apexed truncated tetrahedron is valid")
}

/// A stacked (Apollonian) triangulation: start from the tetrahedron and
/// repeatedly insert a degree-3 vertex into a random face.
pub fn random_stacked_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PlaneGraph> {
    if n < 4 {
        return Err(Error::input("a stacked triangulation needs n >= 4"));
    }
    let mut faces: Vec<Vec<usize>> = tetrahedron_plane().faces().to_vec();
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let f = faces.swap_remove(i);
        faces.push(vec![f[0], f[1], v]);
        faces.push(vec![f[1], f[2], v]);
        faces.push(vec![f[2], f[0], v]);
    }
    PlaneGraph::from_faces(n, faces, None)
}

/// Applies up to `flips` random diagonal flips to a closed triangulation,
/// skipping flips that would create a repeated edge or a degree below 3.
pub fn random_flips<R: Rng + ?Sized>(base: &PlaneGraph, flips: usize, rng: &mut R) -> Result<PlaneGraph> {
    if !base.is_triangulation() {
        return Err(Error::input("flips need a triangulation"));
    }
    let n = base.graph().order();
    let mut faces: Vec<Vec<usize>> = base.faces().to_vec();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| base.graph().neighbors(v).iter().copied().collect())
        .collect();
    for _ in 0..flips {
        let fi = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let (a, b, c) = (faces[fi][k], faces[fi][(k + 1) % 3], faces[fi][(k + 2) % 3]);
        // the other face on edge a-b traverses it as b-a
        let Some(fj) = (0..faces.len()).find(|&j| {
            j != fi && (0..3).any(|t| faces[j][t] == b && faces[j][(t + 1) % 3] == a)
        }) else {
            continue;
        };
        let d = *faces[fj].iter().find(|&&x| x != a && x != b).unwrap();
        if c == d || adj[c].contains(&d) || adj[a].len() <= 3 || adj[b].len() <= 3 {
            continue;
        }
        adj[a].remove(&b);
        adj[b].remove(&a);
        adj[c].insert(d);
        adj[d].insert(c);
        faces[fi] = vec![c, a, d];
        faces[fj] = vec![d, b, c];
    }
    PlaneGraph::from_faces(n, faces, None)
}

/// Uniformly random graph with each edge present with probability `p`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random graph is simple")
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let es: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(es.len(), out).expect("line graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_shape() {
        let g = heawood();
        assert_eq!((g.order(), g.size()), (14, 21));
        assert!((0..14).all(|v| g.degree(v) == 3));
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn small_cases() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
        assert_eq!(star(3).unwrap().degree(0), 3);
    }

    #[test]
    fn plane_solids() {
        for (p, n, m, f) in [
            (tetrahedron_plane(), 4, 6, 4),
            (octahedron_plane(), 6, 12, 8),
            (cube_plane(), 8, 12, 6),
            (icosahedron_plane(), 12, 30, 20),
        ] {
            assert_eq!(p.graph().order(), n);
            assert_eq!(p.graph().size(), m);
            assert_eq!(p.faces().len(), f);
            assert_eq!(p.euler_characteristic(), 2);
        }
        assert!(icosahedron().neighbors(0).len() == 5);
        assert!((0..12).all(|v| icosahedron().degree(v) == 5));
    }

    #[test]
    fn apexed_truncated_tetrahedron_shape() {
        let p = apexed_truncated_tetrahedron();
        let g = p.graph();
        assert_eq!(g.order(), 16);
        assert_eq!(g.size(), 42);
        assert!(p.is_triangulation());
        assert_eq!(p.euler_characteristic(), 2);
        assert!((0..12).all(|v| g.degree(v) == 5));
        assert!((12..16).all(|v| g.degree(v) == 6));
    }

    #[test]
    fn random_triangulations_stay_valid() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for n in 4..14 {
            let t = random_stacked_triangulation(n, &mut rng).unwrap();
            let t = random_flips(&t, 40, &mut rng).unwrap();
            assert!(t.is_triangulation());
            assert_eq!(t.euler_characteristic(), 2);
            assert_eq!(t.graph().size(), 3 * n - 6);
        }
    }
}

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::partition::{classes, partition_meeting_all};
use crate::search::{domatic_number, proper_coloring, CertificateKind, PartitionCertificate};

use super::checked_partition;

/// Stars every face: face `i` gets apex `n + i`, joined to its boundary, and
/// is replaced by the triangles on its boundary edges.
pub fn kleetope(base: &PlaneGraph) -> Result<PlaneGraph> {
    let n = base.graph().order();
    let mut faces = Vec::new();
    for (i, f) in base.faces().iter().enumerate() {
        let mut sorted = f.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != f.len() {
            return Err(Error::input(format!("face {i} repeats a vertex")));
        }
        for j in 0..f.len() {
            faces.push(vec![f[j], f[(j + 1) % f.len()], n + i]);
        }
    }
    PlaneGraph::from_faces(n + base.faces().len(), faces, None)
}

fn require_triangulation(base: &PlaneGraph) -> Result<()> {
    if !base.is_triangulation() {
        return Err(Error::input("every face must be a triangle"));
    }
    Ok(())
}

/// Puts a triangle `f1 f2 f3` inside every face `a b c`, with `f1` joined to
/// `a, b`, `f2` to `b, c` and `f3` to `c, a`. For face `i` the new vertices
/// are `n + 3i`, `n + 3i + 1`, `n + 3i + 2`. Each old face becomes 7.
pub fn u_construction(base: &PlaneGraph) -> Result<PlaneGraph> {
    require_triangulation(base)?;
    let n = base.graph().order();
    let mut faces = Vec::with_capacity(7 * base.faces().len());
    for (i, f) in base.faces().iter().enumerate() {
        let (a, b, c) = (f[0], f[1], f[2]);
        let (f1, f2, f3) = (n + 3 * i, n + 3 * i + 1, n + 3 * i + 2);
        faces.extend([
            vec![f1, f2, f3],
            vec![a, b, f1],
            vec![b, c, f2],
            vec![c, a, f3],
            vec![b, f2, f1],
            vec![c, f3, f2],
            vec![a, f1, f3],
        ]);
    }
    PlaneGraph::from_faces(n + 3 * base.faces().len(), faces, None)
}

/// An injective map from vertices to incident faces. Augmenting paths,
/// vertices in increasing id, faces tried lowest index first.
pub fn vertex_face_matching(base: &PlaneGraph) -> Result<Vec<usize>> {
    require_triangulation(base)?;
    let n = base.graph().order();
    if n < 4 {
        return Err(Error::domain("needs at least 4 vertices"));
    }
    let incident = base.vertex_faces();
    let mut face_owner = vec![usize::MAX; base.faces().len()];
    fn augment(v: usize, incident: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &f in &incident[v] {
            if !std::mem::replace(&mut seen[f], true)
                && (owner[f] == usize::MAX || augment(owner[f], incident, owner, seen))
            {
                owner[f] = v;
                return true;
            }
        }
        false
    }
    for v in 0..n {
        let mut seen = vec![false; face_owner.len()];
        if !augment(v, &incident, &mut face_owner, &mut seen) {
            return Err(Error::invariant(format!("vertex {v} cannot be matched to a face")));
        }
    }
    let mut matched = vec![0; n];
    for (f, &v) in face_owner.iter().enumerate() {
        if v != usize::MAX {
            matched[v] = f;
        }
    }
    Ok(matched)
}

/// Extends classes of base vertices to the Kleetope: each vertex pulls in
/// the apex of its matched face, and unmatched apexes join class `spare`.
fn extend_by_apexes(base: &PlaneGraph, mut cls: Vec<Vec<usize>>, spare: usize) -> Result<PartitionCertificate> {
    let n = base.graph().order();
    let matched = vertex_face_matching(base)?;
    let mut used = vec![false; base.faces().len()];
    for class in &mut cls {
        let extra: Vec<usize> = class.iter().map(|&v| matched[v]).collect();
        for f in extra {
            used[f] = true;
            class.push(n + f);
        }
    }
    for (f, _) in used.iter().enumerate().filter(|(_, &u)| !u) {
        cls[spare].push(n + f);
    }
    for class in &mut cls {
        class.sort_unstable();
    }
    let klee = kleetope(base)?;
    let cert = PartitionCertificate::new(CertificateKind::TotalDominating, cls, klee.graph().order());
    checked_partition(klee.graph(), cert, "Kleetope partition")
}

/// Two disjoint total dominating sets of the Kleetope, from a 2-coloring of
/// the base with no monochromatic face.
///
/// Such a coloring exists for every planar triangulation, so with
/// `planar = true` its absence is an [`Error::Invariant`]. Otherwise
/// absence is reported as `Ok(None)`.
pub fn kleetope_two_tds(base: &PlaneGraph, planar: bool, limits: &Limits) -> Result<Option<PartitionCertificate>> {
    require_triangulation(base)?;
    let n = base.graph().order();
    if n < 4 {
        return Err(Error::domain("needs at least 4 vertices"));
    }
    let faces = Hypergraph::new(n, base.faces().to_vec())?;
    match faces.find_2_coloring(limits)? {
        Some(colors) => extend_by_apexes(base, classes(&colors, 2), 1).map(Some),
        None if planar => Err(Error::invariant("planar triangulation without a face-bichromatic 2-coloring")),
        None => Ok(None),
    }
}

/// Three disjoint total dominating sets of the Kleetope exist exactly when
/// the base is 3-colorable; built from the color classes and the matching.
pub fn kleetope_three_tds(base: &PlaneGraph, limits: &Limits) -> Result<Option<PartitionCertificate>> {
    require_triangulation(base)?;
    if base.graph().order() < 4 {
        return Err(Error::domain("needs at least 4 vertices"));
    }
    match proper_coloring(base.graph(), 3, limits)? {
        Some(colors) => extend_by_apexes(base, classes(&colors, 3), 0).map(Some),
        None => Ok(None),
    }
}

/// Three disjoint total dominating sets of `U(base)` whose traces on the
/// base are three disjoint dominating sets of the base.
///
/// The new vertices of a face cannot always be handed out one per set
/// independently of the rest (a face with two vertices in one set leaves a
/// set without a neighbor among them), so the whole assignment is found by
/// one search.
pub fn u_three_tds(base: &PlaneGraph, limits: &Limits) -> Result<PartitionCertificate> {
    let u = u_construction(base)?;
    let g = base.graph();
    if domatic_number(g, limits)?.0 < 3 {
        return Err(Error::domain("base has no three disjoint dominating sets"));
    }
    let big = u.graph();
    bits::ensure_fits("U construction search", big.order())?;
    let mut sets: Vec<_> = (0..big.order()).map(|v| bits::from_slice(big.neighbors(v))).collect();
    sets.extend((0..g.order()).map(|v| bits::from_slice(g.neighbors(v)) | bits::bit(v)));
    let colors = partition_meeting_all(big.order(), &sets, 3, &mut limits.budget("U construction search"))?
        .ok_or_else(|| Error::invariant("U(G) has no three disjoint total dominating sets"))?;
    let cert = PartitionCertificate::new(CertificateKind::TotalDominating, classes(&colors, 3), big.order());
    checked_partition(big, cert, "U construction partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cube_plane, icosahedron_plane, octahedron_plane, tetrahedron_plane};
    use crate::search::{is_dominating, is_total_dominating, total_domatic_number};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn kleetope_shape() {
        let k = kleetope(&tetrahedron_plane()).unwrap();
        assert_eq!(k.graph().order(), 8);
        assert_eq!(k.euler_characteristic(), 2);
        assert!(k.is_triangulation());
        let q = kleetope(&cube_plane()).unwrap();
        assert_eq!(q.graph().order(), 14);
        assert_eq!(q.euler_characteristic(), 2);
    }

    #[test]
    fn u_shape() {
        let t = tetrahedron_plane();
        let u = u_construction(&t).unwrap();
        assert_eq!(u.graph().order(), 16);
        assert_eq!(u.faces().len(), 28);
        assert_eq!(u.euler_characteristic(), 2);
        for v in 4..16 {
            assert_eq!(u.graph().degree(v), 4);
        }
        assert!(u_construction(&cube_plane()).is_err());
    }

    #[test]
    fn matchings() {
        for p in [tetrahedron_plane(), octahedron_plane(), icosahedron_plane()] {
            let m = vertex_face_matching(&p).unwrap();
            let mut seen = m.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), m.len());
            for (v, &f) in m.iter().enumerate() {
                assert!(p.faces()[f].contains(&v));
            }
        }
    }

    #[test]
    fn kleetope_partitions() {
        let t = tetrahedron_plane();
        assert_eq!(kleetope_two_tds(&t, true, &l()).unwrap().unwrap().classes.len(), 2);
        assert!(kleetope_three_tds(&t, &l()).unwrap().is_none());
        assert_eq!(total_domatic_number(kleetope(&t).unwrap().graph(), &l()).unwrap().0, 2);
        let o = octahedron_plane();
        assert_eq!(kleetope_three_tds(&o, &l()).unwrap().unwrap().classes.len(), 3);
        assert_eq!(total_domatic_number(kleetope(&o).unwrap().graph(), &l()).unwrap().0, 3);
        assert!(kleetope_two_tds(&icosahedron_plane(), true, &l()).unwrap().is_some());
    }

    #[test]
    fn u_partitions() {
        for p in [tetrahedron_plane(), octahedron_plane()] {
            let cert = u_three_tds(&p, &l()).unwrap();
            let n = p.graph().order();
            let u = u_construction(&p).unwrap();
            for c in &cert.classes {
                assert!(is_total_dominating(u.graph(), c));
                let trace: Vec<usize> = c.iter().copied().filter(|&v| v < n).collect();
                assert!(is_dominating(p.graph(), &trace));
            }
        }
    }

    /// K7 on the torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    fn k7_torus() -> PlaneGraph {
        let faces = (0..7)
            .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
            .collect();
        PlaneGraph::from_faces(7, faces, None).unwrap()
    }

    #[test]
    fn toroidal_bases() {
        let k7 = k7_torus();
        assert_eq!((k7.graph().size(), k7.euler_characteristic()), (21, 0));
        assert!(kleetope_two_tds(&k7, false, &l()).unwrap().is_none());
        assert!(matches!(kleetope_two_tds(&k7, true, &l()), Err(Error::Invariant(_))));
        let t = kleetope(&k7).unwrap();
        assert!(crate::search::total_domatic_partition(t.graph(), 2, &l()).unwrap().is_none());

        // K5 on the torus has non-triangular faces, and they can be
        // 2-colored with no monochromatic face
        let faces = vec![vec![0, 1, 2, 4], vec![0, 2, 1, 3, 4, 1], vec![0, 3, 2], vec![0, 4, 3], vec![1, 4, 2, 3]];
        let k5 = PlaneGraph::from_faces(5, faces, None).unwrap();
        assert_eq!((k5.graph().size(), k5.euler_characteristic()), (10, 0));
        assert!(kleetope_two_tds(&k5, false, &l()).is_err());
        let h = Hypergraph::new(5, k5.faces().to_vec()).unwrap();
        assert!(h.find_2_coloring(&l()).unwrap().is_some());
    }
}

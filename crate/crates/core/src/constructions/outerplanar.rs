use crate::error::{Error, Result};
use crate::graph::{Graph, MaximalOuterplanarGraph};
use crate::search::{CertificateKind, PartitionCertificate};

use super::checked_partition;

/// Hangs a new ear `w_e` on every outer edge `e`. Base vertex `i` becomes
/// `2i` and the ear on `i, i+1` becomes `2i + 1`.
pub fn mop_graph(base: &MaximalOuterplanarGraph) -> MaximalOuterplanarGraph {
    let k = base.order();
    let old_cycle = (0..k).map(|i| (2 * i, (2 * (i + 1)) % (2 * k)));
    let old_chords = base.chords().iter().map(|&(u, v)| (2 * u, 2 * v));
    MaximalOuterplanarGraph::new(2 * k, old_cycle.chain(old_chords)).expect("ears keep the polygon triangulated")
}

/// The tree on the bounded triangles, two triangles adjacent when they
/// share a chord.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakDual {
    pub tree: Graph,
    /// Node `i` of the tree is `triangles[i]`.
    pub triangles: Vec<[usize; 3]>,
    /// `(s, t, chord)` for every tree edge `s < t`.
    pub chords: Vec<(usize, usize, (usize, usize))>,
}

impl WeakDual {
    pub fn chord_between(&self, s: usize, t: usize) -> Option<(usize, usize)> {
        let (s, t) = (s.min(t), s.max(t));
        self.chords.iter().find(|c| c.0 == s && c.1 == t).map(|c| c.2)
    }
}

pub fn weak_dual(base: &MaximalOuterplanarGraph) -> WeakDual {
    let triangles = base.triangles();
    let mut chords = Vec::new();
    for &(u, v) in base.chords() {
        let sides: Vec<usize> = (0..triangles.len())
            .filter(|&i| triangles[i].contains(&u) && triangles[i].contains(&v))
            .collect();
        debug_assert_eq!(sides.len(), 2);
        chords.push((sides[0], sides[1], (u, v)));
    }
    chords.sort_unstable();
    let tree = Graph::from_edges(triangles.len(), chords.iter().map(|c| (c.0, c.1))).expect("one edge per chord");
    WeakDual { tree, triangles, chords }
}

/// Two disjoint total dominating sets covering every vertex, built by
/// coloring the outer cycle in runs of two.
///
/// The residue of `n` mod 4 selects the start: `0` needs nothing, `1`
/// starts with a run of three centred next to an ear, and `3` starts with
/// a single vertex at one end of a chord that cuts off four or five
/// vertices. For `n ≡ 2 (mod 4)` there is no such result to run; use the
/// fractional bounds instead.
pub fn outerplanar_two_tds(base: &MaximalOuterplanarGraph) -> Result<PartitionCertificate> {
    let n = base.order();
    if n < 4 {
        return Err(Error::domain("needs at least 4 vertices"));
    }
    let mut red = vec![false; n];
    // runs of two along the cycle starting at `from`, the first run blue
    let mut pairs = |from: usize, len: usize| {
        for j in 0..len {
            red[(from + j) % n] = (j / 2) % 2 == 1;
        }
    };
    match n % 4 {
        0 => pairs(0, n),
        1 => {
            let g = base.to_graph();
            let w = (0..n).find(|&v| g.degree(v) == 2).expect("a triangulated polygon has an ear");
            let v = ((w + 1) % n).min((w + n - 1) % n);
            pairs((v + 2) % n, n - 3);
            for u in [v + n - 1, v, v + 1] {
                red[u % n] = true;
            }
        }
        3 => {
            let (u, _) = separating_chord(base)?;
            pairs((u + 1) % n, n - 1);
            red[u] = true;
        }
        _ => {
            return Err(Error::domain(
                "no two-set construction for n = 2 (mod 4); see the fractional bounds",
            ))
        }
    }
    let classes = [true, false]
        .map(|c| (0..n).filter(|&v| red[v] == c).collect::<Vec<_>>())
        .to_vec();
    let cert = PartitionCertificate::new(CertificateKind::TotalDominating, classes, n);
    checked_partition(&base.to_graph(), cert, "outerplanar two sets")
}

/// A chord whose ends are 3 or 4 apart on the outer cycle: the one dual to
/// the edge from `t` to its only non-leaf neighbor, where `t` is a non-leaf
/// of the weak dual next to at most one other non-leaf.
fn separating_chord(base: &MaximalOuterplanarGraph) -> Result<(usize, usize)> {
    let dual = weak_dual(base);
    let tree = &dual.tree;
    let inner = |x: usize| tree.degree(x) >= 2;
    let candidates: Vec<(usize, usize)> = (0..tree.order())
        .filter(|&t| inner(t))
        .filter_map(|t| {
            let mut inner_nbrs = tree.neighbors(t).iter().copied().filter(|&s| inner(s));
            match (inner_nbrs.next(), inner_nbrs.next()) {
                (Some(s), None) => Some((t, s)),
                _ => None,
            }
        })
        .collect();
    let &(t, s) = candidates
        .iter()
        .find(|&&(t, _)| tree.degree(t) == 2)
        .or(candidates.first())
        .ok_or_else(|| Error::invariant("weak dual has no suitable node"))?;
    let chord = dual.chord_between(t, s).expect("tree edge");
    let d = base.cycle_distance(chord.0, chord.1);
    if !(3..=4).contains(&d) {
        return Err(Error::invariant(format!(
            "chord {}-{} has ends {d} apart on the cycle",
            chord.0, chord.1
        )));
    }
    Ok(chord)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::search::total_domatic_number;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn mop_of_triangle_is_the_sun() {
        let t = MaximalOuterplanarGraph::new(3, []).unwrap();
        let m = mop_graph(&t);
        assert_eq!(m.order(), 6);
        let g = m.to_graph();
        let mut degrees: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [2, 2, 2, 4, 4, 4]);
        assert_eq!(total_domatic_number(&g, &Limits::default()).unwrap().0, 1);
    }

    #[test]
    fn weak_dual_is_a_tree() {
        let sq = MaximalOuterplanarGraph::new(4, [(0, 2)]).unwrap();
        assert_eq!(weak_dual(&sq).tree.size(), 1);
        let fan = weak_dual(&MaximalOuterplanarGraph::fan(9).unwrap());
        assert_eq!(fan.tree.order(), 7);
        assert!(fan.tree.is_connected() && fan.tree.size() == 6 && fan.tree.max_degree() == 2);
        let mut rng = StdRng::seed_from_u64(5);
        for n in 3..30 {
            let d = weak_dual(&MaximalOuterplanarGraph::random(n, &mut rng).unwrap());
            assert_eq!(d.tree.order(), n - 2);
            assert!(d.tree.is_connected() && d.tree.size() == n - 3);
            assert!(d.tree.max_degree() <= 3);
        }
    }

    #[test]
    fn two_sets_for_every_small_polygon() {
        for n in 4..=11 {
            for m in MaximalOuterplanarGraph::enumerate_all(n).unwrap() {
                match outerplanar_two_tds(&m) {
                    Ok(c) => {
                        assert_ne!(n % 4, 2);
                        assert_eq!(c.classes.len(), 2);
                        assert!(c.covers_all);
                    }
                    Err(e) => {
                        assert_eq!(n % 4, 2);
                        assert!(matches!(e, Error::Domain(_)));
                    }
                }
            }
        }
    }

    #[test]
    fn chord_case_distance() {
        let m = MaximalOuterplanarGraph::fan(7).unwrap();
        let (u, v) = separating_chord(&m).unwrap();
        assert!((3..=4).contains(&m.cycle_distance(u, v)));
    }
}

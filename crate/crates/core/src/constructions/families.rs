use crate::error::{Error, Result};
use crate::fractional::{Rational, WeightedFamily};
use crate::graph::{cycle, disjoint_union, Graph};
use crate::limits::Limits;
use crate::search::{find_disjoint_dom_and_total_dom, is_dominating, private_neighbors, total_domination_number};

use super::checked_family;

/// The `n` rotations of one minimum total dominating set of `C_n`; every
/// vertex lies in exactly `γ_t(C_n)` of them.
pub fn cycle_shift_family(n: usize) -> Result<WeightedFamily> {
    let g = cycle(n)?;
    let (_, s) = total_domination_number(&g, &Limits::default())?;
    let sets = (0..n)
        .map(|i| {
            let mut t: Vec<usize> = s.iter().map(|&v| (v + i) % n).collect();
            t.sort_unstable();
            t
        })
        .collect();
    checked_family(&g, WeightedFamily::unit(sets), "cycle shift family")
}

/// All pairwise unions of `k >= 2` disjoint dominating sets. Each union is
/// total dominating and every vertex lies in at most `k - 1` of them.
pub fn pairwise_union_family(g: &Graph, dominating_sets: &[Vec<usize>]) -> Result<WeightedFamily> {
    let k = dominating_sets.len();
    if k < 2 {
        return Err(Error::input("need at least two dominating sets"));
    }
    let mut owner = vec![usize::MAX; g.order()];
    for (i, d) in dominating_sets.iter().enumerate() {
        if !is_dominating(g, d) {
            return Err(Error::input(format!("set {i} is not dominating")));
        }
        for &v in d {
            if v >= g.order() {
                return Err(Error::input(format!("set {i} contains {v}, outside the graph")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::input(format!("vertex {v} lies in sets {} and {i}", owner[v])));
            }
            owner[v] = i;
        }
    }
    let mut sets = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut u = [dominating_sets[i].clone(), dominating_sets[j].clone()].concat();
            u.sort_unstable();
            sets.push(u);
        }
    }
    checked_family(g, WeightedFamily::unit(sets), "pairwise union family")
}

/// Unions `T1 ∪ T2` over all pairs from two unit-weight families, on the
/// disjoint union of their graphs. The ratio is the smaller of the two.
pub fn product_family(g1: &Graph, f1: &WeightedFamily, g2: &Graph, f2: &WeightedFamily) -> Result<WeightedFamily> {
    let one = Rational::from_integer(1.into());
    if f1.members.iter().chain(&f2.members).any(|m| m.weight != one) {
        return Err(Error::input("product family needs unit weights"));
    }
    let shift = g1.order();
    let mut sets = Vec::with_capacity(f1.len() * f2.len());
    for a in &f1.members {
        for b in &f2.members {
            sets.push(
                a.vertices
                    .iter()
                    .copied()
                    .chain(b.vertices.iter().map(|&v| v + shift))
                    .collect(),
            );
        }
    }
    checked_family(&disjoint_union(g1, g2), WeightedFamily::unit(sets), "product family")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClawFreeFamily {
    pub family: WeightedFamily,
    /// The input was `C_5`, for which the rotations family (ratio 5/3) is
    /// returned instead.
    pub substituted: bool,
}

fn is_five_cycle(g: &Graph) -> bool {
    g.order() == 5 && g.is_connected() && (0..5).all(|v| g.degree(v) == 2)
}

/// Three total dominating sets covering every vertex exactly twice, for a
/// claw-free graph with minimum degree at least 2.
///
/// Starts from a split `(R, B)` with `R` minimal total dominating and `B`
/// dominating. Vertices of `B` with no neighbor in `B` each pick two
/// neighbors in `R`, preferring a pair where one is an `R`-private neighbor
/// of the other. The picked pairs form a bipartite graph on `R`, and its
/// two sides extend `B` to two further total dominating sets.
pub fn clawfree_three_family(g: &Graph, limits: &Limits) -> Result<ClawFreeFamily> {
    if !g.is_claw_free() {
        return Err(Error::domain("graph has a claw"));
    }
    if g.min_degree() < 2 {
        return Err(Error::domain("needs minimum degree at least 2"));
    }
    if is_five_cycle(g) {
        return Ok(ClawFreeFamily {
            family: cycle_shift_family(5)?,
            substituted: true,
        });
    }
    let (r, b) = find_disjoint_dom_and_total_dom(g, limits)?;
    let n = g.order();
    let mut in_r = vec![false; n];
    for &v in &r {
        in_r[v] = true;
    }
    let private: Vec<Vec<usize>> = (0..n)
        .map(|v| if in_r[v] { private_neighbors(g, &r, v).expect("v in R") } else { Vec::new() })
        .collect();
    let is_private_of = |x: usize, y: usize| in_r[y] && private[y].contains(&x);
    let mut aux_edges = Vec::new();
    for &x in &b {
        if g.neighbors(x).iter().any(|&w| !in_r[w]) {
            continue;
        }
        let ns = g.neighbors(x);
        let mut chosen = None;
        'pairs: for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                if is_private_of(ns[i], ns[j]) || is_private_of(ns[j], ns[i]) {
                    chosen = Some((ns[i], ns[j]));
                    break 'pairs;
                }
            }
        }
        let (x1, x2) = chosen.unwrap_or((ns[0], ns[1]));
        aux_edges.push((x1, x2));
    }
    aux_edges.sort_unstable();
    aux_edges.dedup();
    let aux = Graph::from_edges(n, aux_edges).expect("pairs are distinct neighbors");
    let side = aux
        .bipartition()
        .ok_or_else(|| Error::invariant("auxiliary graph on R is not bipartite"))?;
    let mut b1 = b.clone();
    let mut b2 = b.clone();
    for &v in &r {
        if side[v] == 0 {
            b1.push(v);
        } else {
            b2.push(v);
        }
    }
    b1.sort_unstable();
    b2.sort_unstable();
    let family = checked_family(g, WeightedFamily::unit(vec![r, b1, b2]), "claw-free family")?;
    Ok(ClawFreeFamily {
        family,
        substituted: false,
    })
}

/// For a connected cubic graph: in each component of the open neighborhood
/// hypergraph, one almost 2-coloring per vertex `v` gives two transversals
/// `A_v, B_v`. Components are combined index-wise, so the result has twice
/// the order of a component many sets.
pub fn cubic_family(g: &Graph, limits: &Limits) -> Result<WeightedFamily> {
    if !g.is_connected() || (0..g.order()).any(|v| g.degree(v) != 3) {
        return Err(Error::domain("needs a connected cubic graph"));
    }
    let onh = g.open_neighborhood_hypergraph()?;
    let mut per_component: Vec<Vec<Vec<usize>>> = Vec::new();
    for (h, back) in onh.components() {
        let mut sets = Vec::with_capacity(2 * h.order());
        for v in 0..h.order() {
            let c = h.almost_2_coloring(v, limits)?;
            for class in [c.a, c.b] {
                sets.push(class.into_iter().map(|u| back[u]).collect::<Vec<_>>());
            }
        }
        per_component.push(sets);
    }
    let len = per_component[0].len();
    if per_component.iter().any(|s| s.len() != len) {
        return Err(Error::invariant("components of a cubic neighborhood hypergraph differ in order"));
    }
    let sets = (0..len)
        .map(|i| {
            let mut s: Vec<usize> = per_component.iter().flat_map(|c| c[i].iter().copied()).collect();
            s.sort_unstable();
            s
        })
        .collect();
    checked_family(g, WeightedFamily::unit(sets), "cubic family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::rational;
    use crate::graph::{complete, petersen, star};

    fn loads(f: &WeightedFamily, n: usize) -> Vec<Rational> {
        f.loads(n)
    }

    #[test]
    fn cycle_shifts() {
        let f = cycle_shift_family(5).unwrap();
        assert_eq!(f.len(), 5);
        assert!(f.members.iter().all(|m| m.vertices.len() == 3));
        assert!(loads(&f, 5).iter().all(|l| *l == rational(3, 1)));
        assert_eq!(f.ratio(5), rational(5, 3));
        assert_eq!(cycle_shift_family(4).unwrap().ratio(4), rational(2, 1));
        assert_eq!(cycle_shift_family(8).unwrap().ratio(8), rational(2, 1));
    }

    #[test]
    fn pairwise_unions() {
        let c6 = cycle(6).unwrap();
        let f = pairwise_union_family(&c6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.ratio(6), rational(3, 2));
        let k4 = complete(4).unwrap();
        let f = pairwise_union_family(&k4, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!((f.len(), f.ratio(4)), (6, rational(2, 1)));
        let f = pairwise_union_family(&k4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!((f.len(), f.ratio(4)), (1, rational(1, 1)));
        assert!(pairwise_union_family(&c6, &[vec![0, 3], vec![0, 4]]).is_err());
        assert!(pairwise_union_family(&c6, &[vec![0], vec![1, 4]]).is_err());
    }

    #[test]
    fn products() {
        let c4 = cycle(4).unwrap();
        let part = WeightedFamily::unit(vec![vec![0, 1], vec![2, 3]]);
        let f = product_family(&c4, &part, &c4, &part).unwrap();
        assert_eq!(f.ratio(8), rational(2, 1));
        let c5 = cycle(5).unwrap();
        let f = product_family(&c5, &cycle_shift_family(5).unwrap(), &c4, &part).unwrap();
        assert_eq!(f.ratio(9), rational(5, 3));
        let whole = WeightedFamily::unit(vec![vec![0, 1, 2, 3]]);
        let f = product_family(&c4, &part, &c4, &whole).unwrap();
        assert_eq!(f.ratio(8), rational(1, 1));
    }

    #[test]
    fn claw_free() {
        let l = Limits::default();
        for g in [cycle(6).unwrap(), complete(4).unwrap(), complete(3).unwrap(), cycle(7).unwrap()] {
            let out = clawfree_three_family(&g, &l).unwrap();
            assert!(!out.substituted);
            assert_eq!(out.family.len(), 3);
            assert!(out.family.loads(g.order()).iter().all(|x| *x == rational(2, 1)));
            assert_eq!(out.family.ratio(g.order()), rational(3, 2));
        }
        let out = clawfree_three_family(&cycle(5).unwrap(), &l).unwrap();
        assert!(out.substituted);
        assert_eq!(out.family.ratio(5), rational(5, 3));
        assert!(matches!(clawfree_three_family(&star(3).unwrap(), &l), Err(Error::Domain(_))));
    }

    #[test]
    fn cubic() {
        let l = Limits::default();
        let f = cubic_family(&complete(4).unwrap(), &l).unwrap();
        assert!(f.ratio(4) >= rational(8, 5));
        let f = cubic_family(&petersen(), &l).unwrap();
        assert_eq!(f.len(), 20);
        assert!(f.ratio(10) >= rational(20, 11));
        assert!(cubic_family(&cycle(4).unwrap(), &l).is_err());
    }
}

//! Closed-form bounds on the fractional total domatic number.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{rational, Rational};
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::search::{domatic_number, total_domatic_number, total_domination_number};

/// Structure the caller vouches for. Never inferred from the graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StructureFlags {
    pub planar: bool,
    /// Every face, the outer one included, is a triangle.
    pub triangulation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub name: &'static str,
    pub value: Rational,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    /// Upper bound on `td` itself; tighter than the fractional bounds for
    /// planar inputs.
    pub td_upper: usize,
}

impl BoundsReport {
    pub fn best_lower(&self) -> &Bound {
        self.lower.iter().max_by(|a, b| a.value.cmp(&b.value)).expect("lower bounds are never empty")
    }

    pub fn best_upper(&self) -> &Bound {
        self.upper.iter().min_by(|a, b| a.value.cmp(&b.value)).expect("upper bounds are never empty")
    }

    /// Whether the lower and upper bounds meet.
    pub fn pins_value(&self) -> bool {
        self.best_lower().value == self.best_upper().value
    }
}

/// Bounds on `FTD(G)`: `td`, `n/(n-δ+1)` and `dom/2` from below; `n/γ_t`,
/// `δ`, and for flagged inputs of order at least 4 the planar and
/// triangulation bounds from above.
pub fn bounds_report(g: &Graph, flags: StructureFlags, limits: &Limits) -> Result<BoundsReport> {
    g.require_isolate_free()?;
    let n = g.order() as i64;
    let delta = g.min_degree() as i64;
    let (td, _) = total_domatic_number(g, limits)?;
    let (dom, _) = domatic_number(g, limits)?;
    let (gt, _) = total_domination_number(g, limits)?;
    let lower = vec![
        Bound {
            name: "td",
            value: rational(td as i64, 1),
            reason: "a partition into total dominating sets is a family with load 1",
        },
        Bound {
            name: "n/(n-delta+1)",
            value: rational(n, n - delta + 1),
            reason: "every set of n-delta+1 vertices is total dominating",
        },
        Bound {
            name: "dom/2",
            value: rational(dom as i64, 2),
            reason: "pairwise unions of disjoint dominating sets",
        },
    ];
    let mut upper = vec![
        Bound {
            name: "n/gamma_t",
            value: rational(n, gt as i64),
            reason: "every member has at least gamma_t vertices",
        },
        Bound {
            name: "delta",
            value: rational(delta, 1),
            reason: "a vertex of minimum degree sees every member",
        },
    ];
    let mut td_upper = (n / gt as i64).min(delta) as usize;
    if flags.triangulation && n >= 4 {
        let avg = g.average_degree()?;
        upper.push(Bound {
            name: "avg_degree-1",
            value: avg - Rational::from_integer(BigInt::from(1)),
            reason: "charging argument over triangles",
        });
    }
    if flags.planar && n >= 4 {
        upper.push(Bound {
            name: "5-12/n",
            value: rational(5 * n - 12, n),
            reason: "planar graphs extend to triangulations with average degree 6-12/n",
        });
        td_upper = td_upper.min(4);
    }
    let min_upper = upper.iter().map(|b| &b.value).min().expect("nonempty");
    td_upper = td_upper.min(min_upper.floor().to_integer().to_usize().unwrap_or(usize::MAX));
    Ok(BoundsReport { lower, upper, td_upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, icosahedron};

    #[test]
    fn five_cycle() {
        let r = bounds_report(&cycle(5).unwrap(), StructureFlags::default(), &Limits::default()).unwrap();
        let get = |bs: &[Bound], name| bs.iter().find(|b| b.name == name).unwrap().value.clone();
        assert_eq!(get(&r.lower, "n/(n-delta+1)"), rational(5, 4));
        assert_eq!(get(&r.lower, "dom/2"), rational(1, 1));
        assert_eq!(get(&r.upper, "delta"), rational(2, 1));
        assert_eq!(get(&r.upper, "n/gamma_t"), rational(5, 3));
        assert_eq!(r.best_lower().value, rational(5, 4));
        assert_eq!(r.best_upper().value, rational(5, 3));
    }

    #[test]
    fn icosahedron_triangulation() {
        let flags = StructureFlags {
            planar: true,
            triangulation: true,
        };
        let r = bounds_report(&icosahedron(), flags, &Limits::default()).unwrap();
        let avg = r.upper.iter().find(|b| b.name == "avg_degree-1").unwrap();
        assert_eq!(avg.value, rational(4, 1));
        assert!(r.td_upper <= 4);
    }

    #[test]
    fn k2_is_pinned() {
        let r = bounds_report(&complete(2).unwrap(), StructureFlags::default(), &Limits::default()).unwrap();
        assert!(r.pins_value());
        assert_eq!(r.best_upper().value, rational(1, 1));
    }
}

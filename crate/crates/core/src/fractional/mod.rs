//! Fractional total domatic and fractional disjoint transversal numbers.
//!
//! Both are the optimum of the packing LP whose columns are transversals of
//! a hypergraph (the open neighborhood hypergraph in the graph case). Only
//! minimal transversals are needed as columns, since shrinking a member of a
//! feasible family keeps it feasible with the same objective. At an optimum
//! some vertex has load exactly 1, so the total weight of the returned
//! family is its effective ratio.

mod bounds;
mod simplex;

pub use bounds::{bounds_report, Bound, BoundsReport, StructureFlags};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::search::is_total_dominating;
use simplex::Simplex;

pub type Rational = num_rational::BigRational;

pub(crate) fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// What a family is checked against.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    /// Members must be total dominating sets.
    Graph(&'a Graph),
    /// Members must be transversals.
    Hypergraph(&'a Hypergraph),
}

impl Target<'_> {
    pub fn order(&self) -> usize {
        match self {
            Target::Graph(g) => g.order(),
            Target::Hypergraph(h) => h.order(),
        }
    }

    fn accepts(&self, s: &[usize]) -> bool {
        match self {
            Target::Graph(g) => is_total_dominating(g, s),
            Target::Hypergraph(h) => h.is_transversal(s),
        }
    }

    fn predicate(&self) -> &'static str {
        match self {
            Target::Graph(_) => "total dominating",
            Target::Hypergraph(_) => "a transversal",
        }
    }

    fn hypergraph(&self) -> Result<Hypergraph> {
        match self {
            Target::Graph(g) => g.open_neighborhood_hypergraph(),
            Target::Hypergraph(h) => Ok((*h).clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub vertices: Vec<usize>,
    pub weight: Rational,
}

/// Vertex sets with positive weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedFamily {
    pub members: Vec<Member>,
}

impl WeightedFamily {
    /// Every set with weight 1.
    pub fn unit(sets: Vec<Vec<usize>>) -> Self {
        WeightedFamily {
            members: sets
                .into_iter()
                .map(|vertices| Member {
                    vertices,
                    weight: Rational::one(),
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn total_weight(&self) -> Rational {
        self.members.iter().map(|m| m.weight.clone()).sum()
    }

    /// Sum of the weights of the members containing each vertex.
    pub fn loads(&self, n: usize) -> Vec<Rational> {
        let mut load = vec![Rational::zero(); n];
        for m in &self.members {
            for &v in &m.vertices {
                if v < n {
                    load[v] += &m.weight;
                }
            }
        }
        load
    }

    pub fn max_load(&self, n: usize) -> Rational {
        self.loads(n).into_iter().max().unwrap_or_else(Rational::zero)
    }

    /// Total weight over maximum load; zero for an empty family.
    pub fn ratio(&self, n: usize) -> Rational {
        let max = self.max_load(n);
        if max.is_zero() {
            Rational::zero()
        } else {
            self.total_weight() / max
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub valid: bool,
    pub ratio: Rational,
    /// Index and description of the first offending member.
    pub first_invalid: Option<(usize, String)>,
}

/// Checks every member against `target`. A valid family certifies that the
/// fractional parameter is at least `ratio`.
pub fn verify_family(target: Target<'_>, family: &WeightedFamily) -> FamilyCheck {
    let n = target.order();
    let mut first_invalid = None;
    for (i, m) in family.members.iter().enumerate() {
        let problem = if !m.weight.is_positive() {
            Some(format!("member {i} has nonpositive weight {}", m.weight))
        } else if let Some(&v) = m.vertices.iter().find(|&&v| v >= n) {
            Some(format!("member {i} contains {v}, outside 0..{n}"))
        } else if !target.accepts(&m.vertices) {
            Some(format!("member {i} is not {}", target.predicate()))
        } else {
            None
        };
        if problem.is_some() {
            first_invalid = problem.map(|p| (i, p));
            break;
        }
    }
    FamilyCheck {
        valid: first_invalid.is_none(),
        ratio: family.ratio(n),
        first_invalid,
    }
}

/// Nonnegative vertex weights with every transversal of weight at least 1;
/// certifies that the fractional parameter is at most `objective`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCertificate {
    pub y: Vec<Rational>,
    pub objective: Rational,
}

impl DualCertificate {
    /// `Ok(Err(reason))` when the certificate is wrong; `Err` only when the
    /// check itself cannot run.
    pub fn verify(&self, target: Target<'_>, limits: &Limits) -> Result<std::result::Result<(), String>> {
        let n = target.order();
        if self.y.len() != n {
            return Ok(Err(format!("{} dual values for {n} vertices", self.y.len())));
        }
        if let Some(v) = self.y.iter().position(Signed::is_negative) {
            return Ok(Err(format!("dual value of vertex {v} is negative")));
        }
        let sum: Rational = self.y.iter().cloned().sum();
        if sum != self.objective {
            return Ok(Err(format!("dual values sum to {sum}, not {}", self.objective)));
        }
        let h = target.hypergraph()?;
        let (lightest, set) = h.min_weight_transversal(&self.y, limits)?;
        if lightest < Rational::one() {
            return Ok(Err(format!("{set:?} is {} with dual weight {lightest} < 1", target.predicate())));
        }
        Ok(Ok(()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Enumerate every minimal transversal up front.
    #[default]
    Enumerate,
    /// Start from the slack basis and price new columns with a minimum
    /// weight transversal search under the current duals.
    ColumnGeneration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSolution {
    pub value: Rational,
    /// Optimal primal family, normalized to maximum load 1.
    pub family: WeightedFamily,
    pub dual: DualCertificate,
    /// Columns the LP saw.
    pub columns: usize,
}

/// `FDT(H)`.
pub fn fdt(h: &Hypergraph, method: Method, limits: &Limits) -> Result<FractionalSolution> {
    if h.edges().is_empty() {
        return Err(Error::domain("without edges the packing is unbounded"));
    }
    let mut budget = limits.budget("simplex pivots");
    let mut lp = match method {
        Method::Enumerate => {
            let (columns, status) = h.enumerate_minimal(limits);
            if let Err(err) = status {
                if !err.is_cap_exceeded() || columns.is_empty() {
                    return Err(err);
                }
                // the restricted LP is still a valid lower bound
                let mut partial = Simplex::new(h.order(), columns);
                partial.optimize(&mut budget)?;
                return Err(err.with_lower_bound(partial.objective()));
            }
            let mut lp = Simplex::new(h.order(), columns);
            lp.optimize(&mut budget)?;
            lp
        }
        Method::ColumnGeneration => {
            let mut lp = Simplex::new(h.order(), Vec::new());
            loop {
                if lp.columns.len() >= limits.max_columns {
                    return Err(Error::CapExceeded {
                        what: "column generation",
                        cap: limits.max_columns as u64,
                        lower_bound: Some(lp.objective()),
                    });
                }
                let duals = lp.optimize(&mut budget).map_err(|e| e.with_lower_bound(lp.objective()))?;
                let (weight, set) = h
                    .min_weight_transversal(&duals.y, limits)
                    .map_err(|e| e.with_lower_bound(lp.objective()))?;
                if weight >= Rational::one() {
                    break;
                }
                let column = minimalize(h, set);
                if lp.columns.contains(&column) {
                    return Err(Error::invariant("pricing returned a column already in the LP"));
                }
                lp.columns.push(column);
            }
            lp
        }
    };
    finish(h, &mut lp, Target::Hypergraph(h))
}

fn minimalize(h: &Hypergraph, mut set: Vec<usize>) -> Vec<usize> {
    let mut i = 0;
    while i < set.len() {
        let v = set.remove(i);
        if !h.is_transversal(&set) {
            set.insert(i, v);
            i += 1;
        }
    }
    set
}

fn finish(h: &Hypergraph, lp: &mut Simplex, target: Target<'_>) -> Result<FractionalSolution> {
    let duals = lp.duals();
    let value = lp.objective();
    let objective: Rational = duals.y.iter().cloned().sum();
    if objective != value {
        return Err(Error::invariant(format!(
            "primal objective {value} differs from dual objective {objective}"
        )));
    }
    let mut family = WeightedFamily {
        members: lp
            .primal()
            .into_iter()
            .map(|(j, weight)| Member {
                vertices: lp.columns[j].clone(),
                weight,
            })
            .collect(),
    };
    let max = family.max_load(h.order());
    if max.is_zero() {
        return Err(Error::invariant("optimal family is empty"));
    }
    if !max.is_one() {
        for m in &mut family.members {
            m.weight /= &max;
        }
    }
    let check = verify_family(target, &family);
    if !check.valid || check.ratio != value {
        return Err(Error::invariant(format!(
            "optimal family fails its own check: {:?}",
            check.first_invalid
        )));
    }
    Ok(FractionalSolution {
        value,
        family,
        dual: DualCertificate { y: duals.y, objective },
        columns: lp.columns.len(),
    })
}

/// `FTD(G)`, the fractional parameter of the open neighborhood hypergraph,
/// with the family expressed as total dominating sets of `g`.
pub fn ftd(g: &Graph, method: Method, limits: &Limits) -> Result<FractionalSolution> {
    let h = g.open_neighborhood_hypergraph()?;
    let sol = fdt(&h, method, limits)?;
    // members are minimal transversals of ONH(G), i.e. minimal total dominating sets
    let check = verify_family(Target::Graph(g), &sol.family);
    if !check.valid {
        return Err(Error::invariant("transversal of the neighborhood hypergraph is not total dominating"));
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, heawood};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn known_values() {
        assert_eq!(ftd(&cycle(5).unwrap(), Method::Enumerate, &l()).unwrap().value, rational(5, 3));
        assert_eq!(ftd(&complete(3).unwrap(), Method::Enumerate, &l()).unwrap().value, rational(3, 2));
        assert_eq!(ftd(&cycle(6).unwrap(), Method::Enumerate, &l()).unwrap().value, rational(3, 2));
        assert_eq!(fdt(&Hypergraph::fano(), Method::Enumerate, &l()).unwrap().value, rational(7, 3));
        let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(fdt(&single, Method::Enumerate, &l()).unwrap().value, rational(2, 1));
    }

    #[test]
    fn column_generation_agrees() {
        for g in [cycle(5).unwrap(), cycle(7).unwrap(), heawood(), complete(4).unwrap()] {
            let a = ftd(&g, Method::Enumerate, &l()).unwrap();
            let b = ftd(&g, Method::ColumnGeneration, &l()).unwrap();
            assert_eq!(a.value, b.value);
            assert!(b.dual.verify(Target::Graph(&g), &l()).unwrap().is_ok());
        }
    }

    #[test]
    fn certificates_check_out() {
        let g = heawood();
        let sol = ftd(&g, Method::Enumerate, &l()).unwrap();
        assert_eq!(sol.value, rational(7, 3));
        assert_eq!(sol.family.max_load(14), Rational::one());
        assert!(sol.dual.verify(Target::Graph(&g), &l()).unwrap().is_ok());
        let mut bad = sol.dual.clone();
        bad.y[0] = Rational::zero();
        bad.objective -= &sol.dual.y[0];
        assert!(bad.verify(Target::Graph(&g), &l()).unwrap().is_err());
    }

    #[test]
    fn cap_reports_lower_bound() {
        let err = ftd(&heawood(), Method::Enumerate, &l().with_max_columns(5)).unwrap_err();
        match err {
            Error::CapExceeded { lower_bound: Some(b), .. } => assert!(b <= rational(7, 3) && b.is_positive()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn family_checks() {
        let c4 = cycle(4).unwrap();
        let good = WeightedFamily::unit(vec![vec![0, 1], vec![2, 3]]);
        let check = verify_family(Target::Graph(&c4), &good);
        assert!(check.valid);
        assert_eq!(check.ratio, rational(2, 1));
        let bad = WeightedFamily::unit(vec![vec![0, 1], vec![0, 2]]);
        let check = verify_family(Target::Graph(&c4), &bad);
        assert_eq!(check.first_invalid.map(|(i, _)| i), Some(1));
    }
}

//! Certificate files: a claimed parameter value together with the sets that
//! witness it and, for the fractional parameters, a dual solution.
//!
//! ```json
//! {"parameter": "ftd", "value": {"num": 5, "den": 3},
//!  "family": [{"vertices": [0, 1, 2], "weight": {"num": 1, "den": 3}}],
//!  "dual": {"y": [{"num": 1, "den": 3}], "objective": {"num": 5, "den": 3}}}
//! ```
//!
//! Rationals are always integer pairs; the integers are arbitrary precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::fractional::{DualCertificate, FractionalSolution, Member, Rational, Target, WeightedFamily};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::search::{is_dominating, is_total_dominating, CertificateKind, PartitionCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameter {
    /// Total domatic number.
    Td,
    /// Fractional total domatic number.
    Ftd,
    /// Total domination number.
    Gt,
    /// Domination number.
    Gamma,
    /// Domatic number.
    Dom,
    /// Transversal number.
    Tau,
    /// Fractional disjoint transversal number.
    Fdt,
    /// Maximum number of disjoint transversals.
    DisjTau,
}

/// How the family of a certificate relates to the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Weighted family whose effective ratio is the value.
    Fractional,
    /// Disjoint unit-weight sets, as many as the value.
    Disjoint,
    /// A single set of the claimed size.
    Witness,
}

impl Parameter {
    pub const ALL: [Parameter; 8] = [
        Parameter::Td,
        Parameter::Ftd,
        Parameter::Gt,
        Parameter::Gamma,
        Parameter::Dom,
        Parameter::Tau,
        Parameter::Fdt,
        Parameter::DisjTau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Td => "td",
            Parameter::Ftd => "ftd",
            Parameter::Gt => "gt",
            Parameter::Gamma => "gamma",
            Parameter::Dom => "dom",
            Parameter::Tau => "tau",
            Parameter::Fdt => "fdt",
            Parameter::DisjTau => "disjtau",
        }
    }

    /// Takes a hypergraph rather than a graph.
    pub fn on_hypergraph(self) -> bool {
        matches!(self, Parameter::Tau | Parameter::Fdt | Parameter::DisjTau)
    }

    fn shape(self) -> Shape {
        match self {
            Parameter::Ftd | Parameter::Fdt => Shape::Fractional,
            Parameter::Td | Parameter::Dom | Parameter::DisjTau => Shape::Disjoint,
            Parameter::Gt | Parameter::Gamma | Parameter::Tau => Shape::Witness,
        }
    }

    fn member_kind(self) -> CertificateKind {
        match self {
            Parameter::Td | Parameter::Ftd | Parameter::Gt => CertificateKind::TotalDominating,
            Parameter::Gamma | Parameter::Dom => CertificateKind::Dominating,
            Parameter::Tau | Parameter::Fdt | Parameter::DisjTau => CertificateKind::Transversal,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::input(format!("unknown parameter `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub parameter: Parameter,
    pub value: Rational,
    pub family: WeightedFamily,
    pub dual: Option<DualCertificate>,
}

/// What a certificate is checked against.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Graph(&'a Graph),
    Hypergraph(&'a Hypergraph),
}

impl Certificate {
    pub fn fractional(parameter: Parameter, solution: &FractionalSolution) -> Self {
        Certificate {
            parameter,
            value: solution.value.clone(),
            family: solution.family.clone(),
            dual: Some(solution.dual.clone()),
        }
    }

    pub fn partition(parameter: Parameter, cert: &PartitionCertificate) -> Self {
        Certificate {
            parameter,
            value: Rational::from_integer(cert.classes.len().into()),
            family: WeightedFamily::unit(cert.classes.clone()),
            dual: None,
        }
    }

    pub fn witness(parameter: Parameter, set: Vec<usize>) -> Self {
        Certificate {
            parameter,
            value: Rational::from_integer(set.len().into()),
            family: WeightedFamily::unit(vec![set]),
            dual: None,
        }
    }

    /// A family from a construction, claiming its own ratio.
    pub fn family(parameter: Parameter, family: WeightedFamily, n: usize) -> Self {
        Certificate {
            parameter,
            value: family.ratio(n),
            family,
            dual: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let family: Vec<Value> = self
            .family
            .members
            .iter()
            .map(|m| json!({"vertices": m.vertices, "weight": rational_json(&m.weight)}))
            .collect();
        let mut out = Map::new();
        out.insert("parameter".into(), json!(self.parameter.name()));
        out.insert("value".into(), rational_json(&self.value));
        out.insert("family".into(), Value::Array(family));
        if let Some(d) = &self.dual {
            let y: Vec<Value> = d.y.iter().map(rational_json).collect();
            out.insert("dual".into(), json!({"y": y, "objective": rational_json(&d.objective)}));
        }
        Value::Object(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("plain JSON tree")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::input(format!("certificate JSON: {e}")))?;
        let parameter: Parameter = field(&v, "parameter")?
            .as_str()
            .ok_or_else(|| Error::input("`parameter` must be a string"))?
            .parse()?;
        let value = rational_from_json(field(&v, "value")?, "value")?;
        let members = field(&v, "family")?
            .as_array()
            .ok_or_else(|| Error::input("`family` must be an array"))?
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let vertices = field(m, "vertices")?
                    .as_array()
                    .ok_or_else(|| Error::input(format!("family[{i}].vertices must be an array")))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| Error::input(format!("family[{i}] has a non-integer vertex")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let weight = rational_from_json(field(m, "weight")?, "weight")?;
                Ok(Member { vertices, weight })
            })
            .collect::<Result<Vec<_>>>()?;
        let dual = match v.get("dual") {
            None | Some(Value::Null) => None,
            Some(d) => {
                let y = field(d, "y")?
                    .as_array()
                    .ok_or_else(|| Error::input("dual.y must be an array"))?
                    .iter()
                    .map(|x| rational_from_json(x, "dual.y"))
                    .collect::<Result<Vec<_>>>()?;
                let objective = rational_from_json(field(d, "objective")?, "dual.objective")?;
                Some(DualCertificate { y, objective })
            }
        };
        Ok(Certificate {
            parameter,
            value,
            family: WeightedFamily { members },
            dual,
        })
    }

    /// `Ok(Err(reason))` names the first violation. `Err` means the check
    /// could not run: the subject is the wrong kind, or the dual check ran
    /// out of budget.
    pub fn verify(&self, subject: Subject<'_>, limits: &Limits) -> Result<std::result::Result<(), String>> {
        let (n, target) = match (subject, self.parameter.on_hypergraph()) {
            (Subject::Graph(g), false) => (g.order(), Target::Graph(g)),
            (Subject::Hypergraph(h), true) => (h.order(), Target::Hypergraph(h)),
            _ => {
                return Err(Error::input(format!(
                    "a {} certificate needs a {}",
                    self.parameter,
                    if self.parameter.on_hypergraph() { "hypergraph" } else { "graph" }
                )))
            }
        };
        let kind = self.parameter.member_kind();
        for (i, m) in self.family.members.iter().enumerate() {
            if let Some(&v) = m.vertices.iter().find(|&&v| v >= n) {
                return Ok(Err(format!("member {i} contains vertex {v}, outside 0..{n}")));
            }
            if !m.weight.is_positive() {
                return Ok(Err(format!("member {i} has nonpositive weight {}", m.weight)));
            }
            let ok = match (subject, kind) {
                (Subject::Graph(g), CertificateKind::Dominating) => is_dominating(g, &m.vertices),
                (Subject::Graph(g), _) => is_total_dominating(g, &m.vertices),
                (Subject::Hypergraph(h), _) => h.is_transversal(&m.vertices),
            };
            if !ok {
                let what = match kind {
                    CertificateKind::Dominating => "dominating",
                    CertificateKind::TotalDominating => "total dominating",
                    CertificateKind::Transversal => "a transversal",
                };
                return Ok(Err(format!("member not {what}: member {i} {:?}", m.vertices)));
            }
        }
        match self.parameter.shape() {
            Shape::Fractional => {
                let ratio = self.family.ratio(n);
                if ratio != self.value {
                    return Ok(Err(format!("ratio mismatch: claimed {}, family gives {ratio}", self.value)));
                }
            }
            Shape::Disjoint => {
                if self.family.members.iter().any(|m| !m.weight.is_one()) {
                    return Ok(Err("disjoint sets must have weight 1".into()));
                }
                if self.family.max_load(n) > Rational::one() {
                    return Ok(Err("members overlap".into()));
                }
                let count = Rational::from_integer(self.family.len().into());
                if count != self.value {
                    return Ok(Err(format!("ratio mismatch: claimed {}, family has {count} sets", self.value)));
                }
            }
            Shape::Witness => {
                let [m] = &self.family.members[..] else {
                    return Ok(Err("a witness certificate has exactly one set".into()));
                };
                let mut vs = m.vertices.clone();
                vs.sort_unstable();
                vs.dedup();
                if Rational::from_integer(vs.len().into()) != self.value {
                    return Ok(Err(format!("size mismatch: claimed {}, set has {}", self.value, vs.len())));
                }
            }
        }
        if let Some(d) = &self.dual {
            if self.parameter.shape() != Shape::Fractional {
                return Ok(Err(format!("a {} certificate has no dual", self.parameter)));
            }
            if d.objective != self.value {
                return Ok(Err(format!("dual objective {} differs from value {}", d.objective, self.value)));
            }
            if let Err(why) = d.verify(target, limits)? {
                return Ok(Err(format!("dual: {why}")));
            }
        }
        Ok(Ok(()))
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::input(format!("missing `{key}`")))
}

fn int_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn rational_json(r: &Rational) -> Value {
    json!({"num": int_json(r.numer()), "den": int_json(r.denom())})
}

fn int_from_json(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| Error::input(format!("{what} must be an integer"))),
        _ => Err(Error::input(format!("{what} must be an integer"))),
    }
}

pub fn rational_from_json(v: &Value, what: &str) -> Result<Rational> {
    let num = int_from_json(field(v, "num")?, what)?;
    let den = int_from_json(field(v, "den")?, what)?;
    if den.is_zero() {
        return Err(Error::input(format!("{what} has denominator 0")));
    }
    Ok(Rational::new(num, den))
}

/// `N` for integers, `N/D` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::{ftd, rational, Method};
    use crate::graph::{cycle, heawood};
    use crate::search::total_domatic_number;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn round_trip_and_verify() {
        let g = heawood();
        let sol = ftd(&g, Method::Enumerate, &l()).unwrap();
        let cert = Certificate::fractional(Parameter::Ftd, &sol);
        let back = Certificate::from_json(&cert.to_json_string()).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.verify(Subject::Graph(&g), &l()).unwrap(), Ok(()));
        assert_eq!(format_rational(&cert.value), "7/3");
    }

    #[test]
    fn tampering_is_caught() {
        let g = cycle(5).unwrap();
        let sol = ftd(&g, Method::Enumerate, &l()).unwrap();
        let mut cert = Certificate::fractional(Parameter::Ftd, &sol);
        cert.family.members[0].weight += Rational::one();
        let why = cert.verify(Subject::Graph(&g), &l()).unwrap().unwrap_err();
        assert!(why.starts_with("ratio mismatch"), "{why}");

        let cert = Certificate::fractional(Parameter::Ftd, &sol);
        let other = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let why = cert.verify(Subject::Graph(&other), &l()).unwrap().unwrap_err();
        assert!(why.starts_with("member not total dominating"), "{why}");
    }

    #[test]
    fn partitions_and_witnesses() {
        let g = cycle(8).unwrap();
        let (_, p) = total_domatic_number(&g, &l()).unwrap();
        let cert = Certificate::partition(Parameter::Td, &p);
        assert_eq!(cert.value, rational(2, 1));
        assert_eq!(cert.verify(Subject::Graph(&g), &l()).unwrap(), Ok(()));
        let mut bad = cert.clone();
        let v = bad.family.members[0].vertices[0];
        bad.family.members[1].vertices.push(v);
        assert_eq!(bad.verify(Subject::Graph(&g), &l()).unwrap(), Err("members overlap".into()));
        let w = Certificate::witness(Parameter::Gamma, vec![0, 3, 6]);
        assert_eq!(w.verify(Subject::Graph(&g), &l()).unwrap(), Ok(()));
        let h = Hypergraph::fano();
        assert!(w.verify(Subject::Hypergraph(&h), &l()).is_err());
    }

    #[test]
    fn big_integers_survive() {
        let r = Rational::new(BigInt::from(10).pow(40), BigInt::from(3));
        let v = rational_json(&r);
        assert!(v.to_string().contains("10000000000000000000000000000000000000000"));
        assert_eq!(rational_from_json(&v, "x").unwrap(), r);
    }
}

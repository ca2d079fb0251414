//! Checking conjectures over streams of graph6 lines.
//!
//! Each graph is checked on one thread; with [`ExecMode::Parallel`] the
//! graphs are spread over the pool and the results merged in line order, so
//! a report differs between modes only in its timings.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::batch::{map_ordered, ExecMode};
use crate::error::{Error, Result};
use crate::fractional::{ftd, Method};
use crate::graph::{parse_graph6, Graph, PlaneGraph};
use crate::limits::Limits;
use crate::search::{coloring_search, find_k_family_max_load, total_domatic_number, total_domatic_partition, ColoringGoal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// Planar triangulations of order at least 4 have `td >= 2`.
    TriTd2,
    /// Connected cubic graphs have four total dominating sets with every
    /// vertex in at most two of them.
    FourFamily,
    /// Planar triangulations have a proper 4-coloring whose color pairs
    /// `{1, 2}` and `{3, 4}` are total dominating.
    FourColorSplit,
    /// Planar triangulations with minimum degree at least 4 have `td >= 3`.
    MinDeg4Td3,
    /// Looks for graphs with `td >= 4`; each one found is reported as a hit.
    Td4,
}

impl Conjecture {
    pub const ALL: [Conjecture; 5] = [
        Conjecture::TriTd2,
        Conjecture::FourFamily,
        Conjecture::FourColorSplit,
        Conjecture::MinDeg4Td3,
        Conjecture::Td4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Conjecture::TriTd2 => "tri-td2",
            Conjecture::FourFamily => "four-family",
            Conjecture::FourColorSplit => "four-color-split",
            Conjecture::MinDeg4Td3 => "mindeg4-td3",
            Conjecture::Td4 => "td4",
        }
    }

    /// The class filter needs face lists.
    pub fn needs_faces(self) -> bool {
        matches!(
            self,
            Conjecture::TriTd2 | Conjecture::FourColorSplit | Conjecture::MinDeg4Td3
        )
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::input(format!("unknown conjecture `{s}`")))
    }
}

/// One graph of a stream.
#[derive(Clone, Debug)]
pub struct StreamItem {
    /// 1-based line in the stream.
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
    pub plane: Option<PlaneGraph>,
}

/// Parses one graph per non-empty line. A corrupt line is reported with
/// its number.
pub fn read_graph6_stream(text: &str) -> Result<Vec<StreamItem>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(line).map_err(|e| Error::text(i + 1, e.to_string()))?;
        out.push(StreamItem {
            line: i + 1,
            graph6: line.to_string(),
            graph,
            plane: None,
        });
    }
    Ok(out)
}

/// Plane graph records separated by blank lines.
pub fn read_plane_stream(text: &str) -> Result<Vec<PlaneGraph>> {
    let mut out = Vec::new();
    let mut record = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !record.trim().is_empty() {
                out.push(PlaneGraph::parse(&record)?);
            }
            record.clear();
        } else {
            record.push_str(line);
            record.push('\n');
        }
    }
    Ok(out)
}

/// Pairs the `i`-th plane record with the `i`-th graph6 line; the two
/// must describe the same labelled graph.
pub fn attach_planes(items: &mut [StreamItem], planes: Vec<PlaneGraph>) -> Result<()> {
    if items.len() != planes.len() {
        return Err(Error::input(format!(
            "{} graphs but {} plane records",
            items.len(),
            planes.len()
        )));
    }
    for (item, p) in items.iter_mut().zip(planes) {
        if *p.graph() != item.graph {
            return Err(Error::text(item.line, "plane record describes a different graph"));
        }
        item.plane = Some(p);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Counterexample {
        parameter: &'static str,
        value: String,
    },
    /// Outside the conjecture's class, or outside the domain of the check.
    Skipped(String),
}

fn in_class(conj: Conjecture, item: &StreamItem) -> std::result::Result<(), String> {
    let g = &item.graph;
    if conj.needs_faces() {
        let p = item.plane.as_ref().ok_or("no face list")?;
        if !p.is_triangulation() || p.euler_characteristic() != 2 || g.order() < 4 || !g.is_connected() {
            return Err("not a planar triangulation on at least 4 vertices".into());
        }
    }
    match conj {
        Conjecture::FourFamily if !g.is_connected() || (0..g.order()).any(|v| g.degree(v) != 3) => {
            Err("not connected cubic".into())
        }
        Conjecture::MinDeg4Td3 if g.min_degree() < 4 => Err("minimum degree below 4".into()),
        _ => Ok(()),
    }
}

/// Decides the conjecture on one graph without any class filtering. This is
/// what a scan runs per graph and what a replay runs.
pub fn check(conj: Conjecture, g: &Graph, limits: &Limits) -> Result<Outcome> {
    let absent = |parameter| Outcome::Counterexample {
        parameter,
        value: "absent".into(),
    };
    let td_counterexample = |g: &Graph| -> Result<Outcome> {
        Ok(Outcome::Counterexample {
            parameter: "td",
            value: total_domatic_number(g, limits)?.0.to_string(),
        })
    };
    Ok(match conj {
        Conjecture::TriTd2 => match total_domatic_partition(g, 2, limits)? {
            Some(_) => Outcome::Holds,
            None => td_counterexample(g)?,
        },
        Conjecture::MinDeg4Td3 => match total_domatic_partition(g, 3, limits)? {
            Some(_) => Outcome::Holds,
            None => td_counterexample(g)?,
        },
        Conjecture::FourFamily => match find_k_family_max_load(g, 4, 2, limits)? {
            Some(_) => Outcome::Holds,
            None => absent("four-family"),
        },
        Conjecture::FourColorSplit => {
            let mut budget = limits.budget("4-coloring split search");
            match coloring_search(g, 4, ColoringGoal::TotalDominatingHalves, &mut budget)? {
                Some(_) => Outcome::Holds,
                None => absent("four-color-split"),
            }
        }
        Conjecture::Td4 => match total_domatic_partition(g, 4, limits)? {
            Some(_) => td_counterexample(g)?,
            None => Outcome::Holds,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub line: usize,
    pub graph6: String,
    pub parameter: &'static str,
    pub value: String,
    /// `ftd` of the graph when its `td` is 1, if it could be computed.
    pub ftd_when_td1: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapHit {
    pub line: usize,
    pub graph6: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub line: usize,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub conjecture: &'static str,
    /// `supported`, `counterexample` or `inconclusive`.
    pub status: &'static str,
    pub scanned: usize,
    pub skipped: Vec<Skip>,
    pub counterexamples: Vec<Counterexample>,
    pub caps_hit: Vec<CapHit>,
    pub timings: Vec<Timing>,
}

impl ScanReport {
    /// 0 clean, 1 counterexample, 3 some graph ran out of budget.
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() {
            1
        } else if !self.caps_hit.is_empty() {
            3
        } else {
            0
        }
    }

    pub fn without_timings(&self) -> ScanReport {
        ScanReport {
            timings: Vec::new(),
            ..self.clone()
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain report")
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Skip graphs outside the conjecture's class instead of assuming the
    /// stream contains only class members.
    pub filter: bool,
    pub mode: ExecMode,
    pub limits: Limits,
}

enum Verdict {
    Holds,
    Skipped(String),
    Found(Counterexample),
    Capped(String),
}

pub fn scan(conj: Conjecture, items: &[StreamItem], opts: &ScanOptions) -> Result<ScanReport> {
    if opts.filter && conj.needs_faces() && items.iter().any(|i| i.plane.is_none()) {
        return Err(Error::input(format!(
            "filtering for {conj} needs a plane stream alongside the graph6 stream"
        )));
    }
    let results = map_ordered(items, opts.mode, |_, item| {
        let start = Instant::now();
        let verdict = evaluate(conj, item, opts);
        (verdict, start.elapsed().as_micros() as u64)
    });
    let mut report = ScanReport {
        conjecture: conj.id(),
        status: "supported",
        scanned: 0,
        skipped: Vec::new(),
        counterexamples: Vec::new(),
        caps_hit: Vec::new(),
        timings: Vec::new(),
    };
    for (item, (verdict, micros)) in items.iter().zip(results) {
        report.timings.push(Timing {
            line: item.line,
            micros,
        });
        match verdict {
            Verdict::Skipped(reason) => {
                report.skipped.push(Skip {
                    line: item.line,
                    reason,
                });
                continue;
            }
            Verdict::Holds => {}
            Verdict::Found(c) => report.counterexamples.push(c),
            Verdict::Capped(message) => report.caps_hit.push(CapHit {
                line: item.line,
                graph6: item.graph6.clone(),
                message,
            }),
        }
        report.scanned += 1;
    }
    report.status = match report.exit_code() {
        0 => "supported",
        1 => "counterexample",
        _ => "inconclusive",
    };
    Ok(report)
}

fn evaluate(conj: Conjecture, item: &StreamItem, opts: &ScanOptions) -> Verdict {
    if opts.filter {
        if let Err(reason) = in_class(conj, item) {
            return Verdict::Skipped(reason);
        }
    }
    match check(conj, &item.graph, &opts.limits) {
        Ok(Outcome::Holds) => Verdict::Holds,
        Ok(Outcome::Skipped(reason)) => Verdict::Skipped(reason),
        Ok(Outcome::Counterexample { parameter, value }) => {
            let ftd_when_td1 = (parameter == "td" && value == "1")
                .then(|| ftd(&item.graph, Method::Enumerate, &opts.limits).ok())
                .flatten()
                .map(|s| s.value.to_string());
            Verdict::Found(Counterexample {
                line: item.line,
                graph6: item.graph6.clone(),
                parameter,
                value,
                ftd_when_td1,
            })
        }
        Err(e) if e.is_cap_exceeded() => Verdict::Capped(e.to_string()),
        Err(e) => Verdict::Skipped(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{kleetope, mop_graph};
    use crate::graph::{complete, encode_graph6, icosahedron_plane, octahedron_plane, petersen, prism, tetrahedron_plane};
    use crate::MaximalOuterplanarGraph;

    fn stream(graphs: &[Graph]) -> String {
        graphs.iter().map(|g| encode_graph6(g) + "\n").collect()
    }

    #[test]
    fn cubic_scan_supports() {
        let text = stream(&[complete(4).unwrap(), prism(), petersen()]);
        let items = read_graph6_stream(&text).unwrap();
        let opts = ScanOptions {
            filter: true,
            ..Default::default()
        };
        let r = scan(Conjecture::FourFamily, &items, &opts).unwrap();
        assert_eq!((r.status, r.scanned, r.exit_code()), ("supported", 3, 0));
    }

    #[test]
    fn planted_counterexample() {
        let sun = mop_graph(&MaximalOuterplanarGraph::new(3, []).unwrap()).to_graph();
        let text = stream(&[complete(4).unwrap(), sun]);
        let items = read_graph6_stream(&text).unwrap();
        let r = scan(Conjecture::TriTd2, &items, &ScanOptions::default()).unwrap();
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.counterexamples.len(), 1);
        let c = &r.counterexamples[0];
        assert_eq!((c.line, c.value.as_str()), (2, "1"));
        assert!(c.ftd_when_td1.is_some());
        let replay = check(Conjecture::TriTd2, &parse_graph6(&c.graph6).unwrap(), &Limits::default()).unwrap();
        assert!(matches!(replay, Outcome::Counterexample { .. }));
    }

    #[test]
    fn plane_filter_and_modes() {
        let planes = [
            tetrahedron_plane(),
            octahedron_plane(),
            icosahedron_plane(),
            kleetope(&octahedron_plane()).unwrap(),
        ];
        let text = stream(&planes.iter().map(|p| p.graph().clone()).collect::<Vec<_>>());
        let plane_text: String = planes.iter().map(|p| p.format() + "\n").collect();
        let mut items = read_graph6_stream(&text).unwrap();
        attach_planes(&mut items, read_plane_stream(&plane_text).unwrap()).unwrap();
        for conj in [Conjecture::TriTd2, Conjecture::MinDeg4Td3, Conjecture::FourColorSplit] {
            let seq = ScanOptions {
                filter: true,
                mode: ExecMode::Sequential,
                ..Default::default()
            };
            let par = ScanOptions {
                mode: ExecMode::Parallel,
                ..seq.clone()
            };
            let a = scan(conj, &items, &seq).unwrap();
            let b = scan(conj, &items, &par).unwrap();
            assert_eq!(a.without_timings(), b.without_timings());
            assert_eq!(a.exit_code(), 0, "{conj}: {a:?}");
        }
        let r = scan(
            Conjecture::MinDeg4Td3,
            &items,
            &ScanOptions {
                filter: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.scanned, 2);
        assert!(scan(Conjecture::TriTd2, &read_graph6_stream(&text).unwrap(), &ScanOptions { filter: true, ..Default::default() }).is_err());
    }

    #[test]
    fn corrupt_line_is_located() {
        match read_graph6_stream("C~\n\nC~~\n") {
            Err(Error::Text { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}

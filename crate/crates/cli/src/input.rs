use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use tdlab::{Error, Graph, Hypergraph, MaximalOuterplanarGraph, PlaneGraph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// graph6, first graph of the file
    G6,
    /// `n <count>` then one `u v` edge per line
    Edges,
    /// one hyperedge per line
    Hyper,
    /// edges and faces
    Plane,
    /// triangulated polygon given by its chords
    Mop,
}

/// What an input file parsed into.
pub enum Input {
    Graph(Graph),
    Plane(PlaneGraph),
    Mop(MaximalOuterplanarGraph),
    Hyper(Hypergraph),
}

impl Input {
    pub fn graph(&self) -> Option<Graph> {
        match self {
            Input::Graph(g) => Some(g.clone()),
            Input::Plane(p) => Some(p.graph().clone()),
            Input::Mop(m) => Some(m.to_graph()),
            Input::Hyper(_) => None,
        }
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn guess_format(path: &Path) -> Option<Format> {
    match path.extension()?.to_str()? {
        "g6" | "graph6" => Some(Format::G6),
        "edges" | "txt" => Some(Format::Edges),
        "hyper" => Some(Format::Hyper),
        "plane" => Some(Format::Plane),
        "mop" => Some(Format::Mop),
        _ => None,
    }
}

pub fn parse(text: &str, format: Format) -> Result<Input> {
    Ok(match format {
        Format::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::Input("empty graph6 input".into()))?;
            Input::Graph(tdlab::graph::parse_graph6(line)?)
        }
        Format::Edges => Input::Graph(tdlab::graph::parse_edge_list(text)?),
        Format::Hyper => Input::Hyper(Hypergraph::parse(text)?),
        Format::Plane => Input::Plane(PlaneGraph::parse(text)?),
        Format::Mop => Input::Mop(MaximalOuterplanarGraph::parse(text)?),
    })
}

pub fn load(path: &Path, format: Option<Format>) -> Result<Input> {
    let format = format
        .or_else(|| guess_format(path))
        .ok_or_else(|| Error::Input(format!("cannot tell the format of {}; pass --format", path.display())))?;
    parse(&read_text(path)?, format)
}

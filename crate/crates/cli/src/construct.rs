use tdlab::certificate::{Certificate, Parameter};
use tdlab::constructions as c;
use tdlab::graph as gen;
use tdlab::search::{CertificateKind, PartitionCertificate};
use tdlab::{Error, Graph, Hypergraph, Limits, MaximalOuterplanarGraph, PlaneGraph, Result};

use crate::input::Input;

pub struct Built {
    pub object: Input,
    pub certificate: Option<Certificate>,
}

pub const SPECS: &str = "cycle:N path:N complete:N complete-bipartite:A:B star:K petersen heawood prism \
tetrahedron octahedron cube icosahedron apexed-truncated-tetrahedron fano complete-uniform:N:K fan:N \
cycle-shift:N | with --base: subdivision line mop kleetope u clawfree3 cubic-family outerplanar2 \
kleetope2 kleetope3 u3 split4 odd2";

fn numbers(args: &[&str], want: usize, spec: &str) -> Result<Vec<usize>> {
    if args.len() != want {
        return Err(Error::Input(format!("`{spec}` takes {want} numeric argument(s)")));
    }
    args.iter()
        .map(|a| a.parse().map_err(|_| Error::Input(format!("`{a}` is not a number"))))
        .collect()
}

fn graph_of(base: Option<&Input>, spec: &str) -> Result<Graph> {
    base.and_then(Input::graph)
        .ok_or_else(|| Error::Input(format!("`{spec}` needs --base with a graph")))
}

fn plane_of<'a>(base: Option<&'a Input>, spec: &str) -> Result<&'a PlaneGraph> {
    match base {
        Some(Input::Plane(p)) => Ok(p),
        _ => Err(Error::Input(format!("`{spec}` needs --base with a plane graph"))),
    }
}

fn mop_of<'a>(base: Option<&'a Input>, spec: &str) -> Result<&'a MaximalOuterplanarGraph> {
    match base {
        Some(Input::Mop(m)) => Ok(m),
        _ => Err(Error::Input(format!("`{spec}` needs --base with a triangulated polygon"))),
    }
}

fn plain(object: Input) -> Result<Built> {
    Ok(Built {
        object,
        certificate: None,
    })
}

fn with_partition(object: Input, cert: PartitionCertificate) -> Result<Built> {
    let parameter = match cert.kind {
        CertificateKind::Dominating => Parameter::Dom,
        CertificateKind::TotalDominating => Parameter::Td,
        CertificateKind::Transversal => Parameter::DisjTau,
    };
    Ok(Built {
        object,
        certificate: Some(Certificate::partition(parameter, &cert)),
    })
}

pub fn build(spec: &str, base: Option<&Input>, planar: bool, limits: &Limits) -> Result<Built> {
    let parts: Vec<&str> = spec.split(':').collect();
    let (name, args) = (parts[0], &parts[1..]);
    let no_args = |b: Result<Built>| {
        if args.is_empty() {
            b
        } else {
            Err(Error::Input(format!("`{name}` takes no arguments")))
        }
    };
    match name {
        "cycle" => plain(Input::Graph(gen::cycle(numbers(args, 1, spec)?[0])?)),
        "path" => plain(Input::Graph(gen::path(numbers(args, 1, spec)?[0]))),
        "complete" => plain(Input::Graph(gen::complete(numbers(args, 1, spec)?[0])?)),
        "complete-bipartite" => {
            let ab = numbers(args, 2, spec)?;
            plain(Input::Graph(gen::complete_bipartite(ab[0], ab[1])))
        }
        "star" => plain(Input::Graph(gen::star(numbers(args, 1, spec)?[0])?)),
        "petersen" => no_args(plain(Input::Graph(gen::petersen()))),
        "heawood" => no_args(plain(Input::Graph(gen::heawood()))),
        "prism" => no_args(plain(Input::Graph(gen::prism()))),
        "tetrahedron" => no_args(plain(Input::Plane(gen::tetrahedron_plane()))),
        "octahedron" => no_args(plain(Input::Plane(gen::octahedron_plane()))),
        "cube" => no_args(plain(Input::Plane(gen::cube_plane()))),
        "icosahedron" => no_args(plain(Input::Plane(gen::icosahedron_plane()))),
        "apexed-truncated-tetrahedron" => no_args(plain(Input::Plane(gen::apexed_truncated_tetrahedron()))),
        "fano" => no_args(plain(Input::Hyper(Hypergraph::fano()))),
        "complete-uniform" => {
            let nk = numbers(args, 2, spec)?;
            plain(Input::Hyper(Hypergraph::complete_uniform(nk[0], nk[1])?))
        }
        "fan" => plain(Input::Mop(MaximalOuterplanarGraph::fan(numbers(args, 1, spec)?[0])?)),
        "cycle-shift" => {
            let n = numbers(args, 1, spec)?[0];
            let family = c::cycle_shift_family(n)?;
            Ok(Built {
                object: Input::Graph(gen::cycle(n)?),
                certificate: Some(Certificate::family(Parameter::Ftd, family, n)),
            })
        }
        "subdivision" => no_args(plain(Input::Graph(graph_of(base, spec)?.subdivision()))),
        "line" => no_args(plain(Input::Graph(gen::line_graph(&graph_of(base, spec)?)))),
        "mop" => no_args(plain(Input::Mop(c::mop_graph(mop_of(base, spec)?)))),
        "kleetope" => no_args(plain(Input::Plane(c::kleetope(plane_of(base, spec)?)?))),
        "u" => no_args(plain(Input::Plane(c::u_construction(plane_of(base, spec)?)?))),
        "clawfree3" => no_args({
            let g = graph_of(base, spec)?;
            let out = c::clawfree_three_family(&g, limits)?;
            if out.substituted {
                eprintln!("note: 5-cycle input, using its rotations instead");
            }
            let n = g.order();
            Ok(Built {
                object: Input::Graph(g),
                certificate: Some(Certificate::family(Parameter::Ftd, out.family, n)),
            })
        }),
        "cubic-family" => no_args({
            let g = graph_of(base, spec)?;
            let family = c::cubic_family(&g, limits)?;
            let n = g.order();
            Ok(Built {
                object: Input::Graph(g),
                certificate: Some(Certificate::family(Parameter::Ftd, family, n)),
            })
        }),
        "outerplanar2" => no_args({
            let m = mop_of(base, spec)?;
            with_partition(Input::Mop(m.clone()), c::outerplanar_two_tds(m)?)
        }),
        "kleetope2" => no_args({
            let p = plane_of(base, spec)?;
            match c::kleetope_two_tds(p, planar, limits)? {
                Some(cert) => with_partition(Input::Plane(c::kleetope(p)?), cert),
                None => Err(Error::Domain(
                    "no 2-coloring of the base leaves every face bichromatic".into(),
                )),
            }
        }),
        "kleetope3" => no_args({
            let p = plane_of(base, spec)?;
            match c::kleetope_three_tds(p, limits)? {
                Some(cert) => with_partition(Input::Plane(c::kleetope(p)?), cert),
                None => Err(Error::Domain("the base is not 3-colorable".into())),
            }
        }),
        "u3" => no_args({
            let p = plane_of(base, spec)?;
            with_partition(Input::Plane(c::u_construction(p)?), c::u_three_tds(p, limits)?)
        }),
        "split4" => no_args({
            let p = plane_of(base, spec)?;
            let colors = c::four_coloring_split(p, limits)?
                .ok_or_else(|| Error::Domain("no 4-coloring with total dominating halves".into()))?;
            let n = colors.len();
            let halves = (0..2)
                .map(|h| (0..n).filter(|&v| colors[v] / 2 == h).collect())
                .collect();
            Ok(Built {
                object: Input::Plane(p.clone()),
                certificate: Some(Certificate::family(Parameter::Td, tdlab::WeightedFamily::unit(halves), n)),
            })
        }),
        "odd2" => no_args({
            let p = plane_of(base, spec)?;
            with_partition(Input::Plane(p.clone()), c::odd_degree_two_tds(p, limits)?)
        }),
        _ => Err(Error::Input(format!("unknown construction `{spec}`; known: {SPECS}"))),
    }
}

mod construct;
mod input;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tdlab::batch::ExecMode;
use tdlab::certificate::{Certificate, Parameter, Subject};
use tdlab::fractional::{bounds_report, fdt, ftd, Method, StructureFlags};
use tdlab::graph::{encode_graph6, format_edge_list};
use tdlab::scan::{attach_planes, read_graph6_stream, read_plane_stream, scan, Conjecture, ScanOptions};
use tdlab::search::{domatic_number, domination_number, total_domatic_number, total_domination_number};
use tdlab::{Error, Graph, Limits, PartitionCertificate, Result};

use input::{load, Format, Input};

#[derive(Parser)]
#[command(name = "tdlab", version, about = "Total domatic numbers, exactly")]
struct Cli {
    /// Node budget per search; defaults to $TDLAB_NODE_BUDGET or 1000000.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    /// Most minimal transversals one enumeration may produce.
    #[arg(long, global = true)]
    max_columns: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Enumerate,
    Colgen,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Native,
    G6,
}

#[derive(Subcommand)]
enum Command {
    /// Print one parameter of a graph or hypergraph.
    Compute {
        #[arg(long, value_parser = parse_parameter)]
        param: Parameter,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write a certificate JSON here.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: MethodArg,
        input: PathBuf,
    },
    /// Build a named graph or run a construction on --base.
    Construct {
        /// One of: cycle:N, petersen, kleetope, clawfree3, ... (see --help)
        #[arg(long_help = construct::SPECS)]
        spec: String,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, value_enum)]
        base_format: Option<Format>,
        /// The base is known to be planar.
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "native")]
        output: OutFormat,
    },
    /// Re-check a certificate against its graph or hypergraph.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        input: PathBuf,
    },
    /// Check a conjecture on every graph of a graph6 stream.
    Scan {
        #[arg(value_parser = parse_conjecture)]
        conjecture: Conjecture,
        stream: PathBuf,
        /// Skip graphs outside the conjecture's class.
        #[arg(long)]
        filter: bool,
        /// Face lists for the graphs, blank-line separated, in stream order.
        #[arg(long)]
        plane_stream: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print closed-form bounds on the fractional total domatic number.
    Bounds {
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        triangulation: bool,
        input: PathBuf,
    },
}

fn parse_parameter(s: &str) -> std::result::Result<Parameter, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_conjecture(s: &str) -> std::result::Result<Conjecture, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit codes: 0 fine, 1 counterexample or invalid certificate, 2 bad
/// input, 3 budget exhausted.
fn exit_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::default();
    if let Some(n) = cli.node_budget {
        limits = limits.with_node_budget(n);
    }
    if let Some(c) = cli.max_columns {
        limits = limits.with_max_columns(c);
    }
    match run(cli.command, &limits) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn run(command: Command, limits: &Limits) -> Result<u8> {
    match command {
        Command::Compute {
            param,
            format,
            certificate,
            method,
            input,
        } => {
            let method = match method {
                MethodArg::Enumerate => Method::Enumerate,
                MethodArg::Colgen => Method::ColumnGeneration,
            };
            let object = load(&input, format)?;
            match compute(param, &object, method, limits) {
                Ok((value, cert)) => {
                    println!("{value}");
                    if let Some(path) = certificate {
                        write_file(&path, &cert.to_json_string())?;
                    }
                    Ok(0)
                }
                Err(e @ Error::CapExceeded { .. }) => {
                    eprintln!("error: {e}");
                    if let Some(g) = object.graph() {
                        print_known_bounds(&g, limits);
                    }
                    Ok(3)
                }
                Err(e) => Err(e),
            }
        }
        Command::Construct {
            spec,
            base,
            base_format,
            planar,
            certificate,
            output,
        } => {
            let base = base.map(|p| load(&p, base_format)).transpose()?;
            let built = construct::build(&spec, base.as_ref(), planar, limits)?;
            print!("{}", render(&built.object, output)?);
            if let Some(cert) = &built.certificate {
                eprintln!("{} {}", cert.parameter, cert.value);
                match certificate {
                    Some(path) => write_file(&path, &cert.to_json_string())?,
                    None => eprintln!("(pass --certificate to save the certificate)"),
                }
            }
            Ok(0)
        }
        Command::Verify {
            certificate,
            format,
            input,
        } => {
            let cert = Certificate::from_json(&input::read_text(&certificate)?)?;
            let object = load(&input, format)?;
            let graph = object.graph();
            let subject = match (&object, &graph) {
                (Input::Hyper(h), _) => Subject::Hypergraph(h),
                (_, Some(g)) => Subject::Graph(g),
                _ => unreachable!("non-hypergraph inputs have a graph"),
            };
            match cert.verify(subject, limits)? {
                Ok(()) => {
                    println!("valid: {} = {}", cert.parameter, cert.value);
                    Ok(0)
                }
                Err(why) => {
                    println!("invalid: {why}");
                    Ok(1)
                }
            }
        }
        Command::Scan {
            conjecture,
            stream,
            filter,
            plane_stream,
            sequential,
            report,
        } => {
            let mut items = read_graph6_stream(&input::read_text(&stream)?)?;
            if let Some(p) = plane_stream {
                attach_planes(&mut items, read_plane_stream(&input::read_text(&p)?)?)?;
            }
            let opts = ScanOptions {
                filter,
                mode: if sequential { ExecMode::Sequential } else { ExecMode::Parallel },
                limits: *limits,
            };
            let r = scan(conjecture, &items, &opts)?;
            let json = r.to_json_string();
            match report {
                Some(path) => write_file(&path, &(json + "\n"))?,
                None => println!("{json}"),
            }
            eprintln!(
                "{}: {} scanned, {} skipped, {} counterexample(s), {} capped",
                r.status,
                r.scanned,
                r.skipped.len(),
                r.counterexamples.len(),
                r.caps_hit.len()
            );
            Ok(r.exit_code() as u8)
        }
        Command::Bounds {
            format,
            planar,
            triangulation,
            input,
        } => {
            let object = load(&input, format)?;
            let g = object
                .graph()
                .ok_or_else(|| Error::Input("bounds apply to graphs, not hypergraphs".into()))?;
            let report = bounds_report(&g, StructureFlags { planar, triangulation }, limits)?;
            for b in &report.lower {
                println!("lower  {:<16} {:<8} {}", b.name, b.value.to_string(), b.reason);
            }
            for b in &report.upper {
                println!("upper  {:<16} {:<8} {}", b.name, b.value.to_string(), b.reason);
            }
            let (lo, hi) = (report.best_lower(), report.best_upper());
            println!("{} <= ftd <= {}", lo.value, hi.value);
            println!("td <= {}", report.td_upper);
            if report.pins_value() {
                println!("ftd = {}", lo.value);
            }
            Ok(0)
        }
    }
}

fn render(object: &Input, output: OutFormat) -> Result<String> {
    if output == OutFormat::G6 {
        let g = object
            .graph()
            .ok_or_else(|| Error::Input("hypergraphs have no graph6 form".into()))?;
        return Ok(encode_graph6(&g) + "\n");
    }
    Ok(match object {
        Input::Graph(g) => format_edge_list(g),
        Input::Plane(p) => p.format(),
        Input::Mop(m) => m.format(),
        Input::Hyper(h) => h.format(),
    })
}

fn need_graph(object: &Input, param: Parameter) -> Result<Graph> {
    object
        .graph()
        .ok_or_else(|| Error::Input(format!("{param} takes a graph, not a hypergraph")))
}

fn compute(param: Parameter, object: &Input, method: Method, limits: &Limits) -> Result<(String, Certificate)> {
    let partition = |cert: PartitionCertificate| {
        let c = Certificate::partition(param, &cert);
        (cert.classes.len().to_string(), c)
    };
    let witness = |(size, set): (usize, Vec<usize>)| (size.to_string(), Certificate::witness(param, set));
    if param.on_hypergraph() {
        let Input::Hyper(h) = object else {
            return Err(Error::Input(format!("{param} takes a hypergraph (--format hyper)")));
        };
        return Ok(match param {
            Parameter::Tau => witness(h.transversal_number(limits)?),
            Parameter::Fdt => {
                let sol = fdt(h, method, limits)?;
                (sol.value.to_string(), Certificate::fractional(param, &sol))
            }
            _ => {
                let (_, sets) = h.disjoint_transversal_number(limits)?;
                let covered: usize = sets.iter().map(Vec::len).sum();
                let cert = PartitionCertificate {
                    kind: tdlab::search::CertificateKind::Transversal,
                    covers_all: covered == h.order(),
                    classes: sets,
                };
                partition(cert)
            }
        });
    }
    let g = need_graph(object, param)?;
    Ok(match param {
        Parameter::Td => partition(total_domatic_number(&g, limits)?.1),
        Parameter::Dom => partition(domatic_number(&g, limits)?.1),
        Parameter::Gt => witness(total_domination_number(&g, limits)?),
        Parameter::Gamma => witness(domination_number(&g, limits)?),
        _ => {
            let sol = ftd(&g, method, limits)?;
            (sol.value.to_string(), Certificate::fractional(param, &sol))
        }
    })
}

/// Whatever bounds still fit the budget, for a computation that did not.
fn print_known_bounds(g: &Graph, limits: &Limits) {
    match bounds_report(g, StructureFlags::default(), limits) {
        Ok(r) => println!(
            "bounds: {} <= ftd <= {} ({} / {})",
            r.best_lower().value,
            r.best_upper().value,
            r.best_lower().name,
            r.best_upper().name
        ),
        Err(_) => {
            let (n, delta) = (g.order(), g.min_degree());
            let lower = tdlab::Rational::new(n.into(), (n - delta + 1).into());
            println!("bounds: {lower} <= ftd <= {delta} (n/(n-delta+1) / delta)");
        }
    }
}

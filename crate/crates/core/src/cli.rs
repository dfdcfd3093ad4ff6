//! Command-line front end. Results go to standard output as JSON or DOT,
//! diagnostics to standard error.
//!
//! Exit codes: 0 success or valid certificate, 1 invalid certificate, failed
//! property or internal error, 2 malformed input, 3 size limit exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use crate::bounds::{cd, chromatic_number, zig};
use crate::certificates::{verify_minor_model, verify_odd_expansion, MinorModel, OddExpansion};
use crate::constructions::{extract_minor_from_kneser_rep, odd_hadwiger_witness, schrijver_expansion};
use crate::decompose::{bipartite_connected_partition, partition_coloring, verify_partition, PartitionCertificate};
use crate::dot::{to_dot, Overlay};
use crate::error::{Error, Result};
use crate::families::{crown, join, kneser, kneser_graph, schrijver};
use crate::graph::{Graph, Hypergraph};
use crate::limits::Limits;
use crate::report::ValidationReport;
use crate::sweep::{parse_config, run_sweep};

#[derive(Parser, Debug)]
#[command(name = "minorforge", version, about = "Clique minors from colorings and Kneser representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
    },
    /// Exact chromatic number, zigzag number or 2-colorability defect.
    Bounds {
        #[command(flatten)]
        which: BoundKind,
        /// Graph JSON (hypergraph JSON for --cd); `-` reads standard input.
        input: PathBuf,
    },
    /// Ordered bipartite-connected partition of a graph.
    Decompose { graph: PathBuf },
    /// Build a certificate.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(value_enum)]
        kind: CertKind,
        #[arg(long)]
        graph: PathBuf,
        /// Certificate JSON; standard input when omitted or `-`.
        certificate: Option<PathBuf>,
    },
    /// Export a graph, optionally with a certificate overlay.
    Export {
        #[command(subcommand)]
        target: ExportTarget,
    },
    /// Run a batch of property checks from a JSON config.
    Sweep {
        config: PathBuf,
        /// Overrides the seed from the config (default 0).
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// All k-subsets of [n], adjacent when disjoint.
    Kneser { n: u32, k: u32 },
    /// Cyclically stable k-subsets of [n], adjacent when disjoint.
    Schrijver { n: u32, k: u32 },
    /// Complete bipartite graph on n + n vertices minus a perfect matching.
    Crown { n: usize },
    /// Join of two graphs.
    Join { first: PathBuf, second: PathBuf },
    /// Graph JSON, or the Kneser graph of a hypergraph JSON.
    FromJson { input: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BoundKind {
    #[arg(long)]
    chi: bool,
    #[arg(long)]
    zig: bool,
    #[arg(long)]
    cd: bool,
}

#[derive(Subcommand, Debug)]
enum WitnessKind {
    /// Odd clique expansion from the longest zigzag of the partition coloring.
    OddHadwiger { graph: PathBuf },
    /// Clique minor of the Kneser graph of a hypergraph.
    Dolnikov { hypergraph: PathBuf },
    /// Odd clique expansion of order n-2k+2 in a Schrijver graph.
    Schrijver { n: u32, k: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CertKind {
    Expansion,
    Minor,
    Partition,
}

#[derive(Subcommand, Debug)]
enum ExportTarget {
    Dot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with_all = ["minor", "partition"])]
        expansion: Option<PathBuf>,
        #[arg(long, conflicts_with = "partition")]
        minor: Option<PathBuf>,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Failed,
}

fn read_source(path: &Path) -> Result<String> {
    let mut raw = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut raw)
            .map_err(|e| Error::input(format!("reading standard input: {e}")))?;
    } else {
        raw = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(raw)
}

fn load<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let raw = read_source(path)?;
    serde_json::from_str(&raw).map_err(|e| Error::input(format!("{what} {}: {e}", path.display())))
}

fn emit_graph(out: &mut dyn Write, g: &Graph, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", g.to_json()),
        Format::Dot => write!(out, "{}", to_dot(g, Overlay::None)),
    }
}

fn emit_report(out: &mut dyn Write, report: &ValidationReport) -> std::io::Result<Outcome> {
    let body = json!({ "valid": report.is_valid(), "violations": report.violations });
    writeln!(out, "{body}")?;
    Ok(if report.is_valid() { Outcome::Ok } else { Outcome::Failed })
}

fn io(e: std::io::Error) -> Error {
    Error::internal(format!("writing output: {e}"))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Gen { family, format } => {
            let g = match family {
                Family::Kneser { n, k } => kneser(n, k)?,
                Family::Schrijver { n, k } => schrijver(n, k)?,
                Family::Crown { n } => crown(n),
                Family::Join { first, second } => {
                    join(&load(&first, "graph")?, &load(&second, "graph")?)
                }
                Family::FromJson { input } => {
                    let raw = read_source(&input)?;
                    let value: serde_json::Value = serde_json::from_str(&raw)?;
                    if value.get("m").is_some() {
                        kneser_graph(&serde_json::from_value::<Hypergraph>(value)?)
                    } else {
                        serde_json::from_value::<Graph>(value)?
                    }
                }
            };
            emit_graph(out, &g, format).map_err(io)?;
        }
        Command::Bounds { which, input } => {
            let body = if which.cd {
                let h: Hypergraph = load(&input, "hypergraph")?;
                let (value, w) = cd(&h, &limits)?;
                json!({ "value": value, "removed": w.u, "coloring": w.coloring })
            } else {
                let g: Graph = load(&input, "graph")?;
                if which.chi {
                    let (value, c) = chromatic_number(&g, &limits)?;
                    json!({ "value": value, "coloring": c })
                } else {
                    let (value, c, w) = zig(&g, &limits)?;
                    json!({ "value": value, "coloring": c, "zigzag": w.sequence })
                }
            };
            writeln!(out, "{body}").map_err(io)?;
        }
        Command::Decompose { graph } => {
            let g: Graph = load(&graph, "graph")?;
            let p = bipartite_connected_partition(&g)?;
            let c = partition_coloring(&g, &p)?;
            writeln!(out, "{}", p.to_json()).map_err(io)?;
            writeln!(err, "{} parts, coloring {:?}", p.len(), c.as_slice()).map_err(io)?;
        }
        Command::Witness { kind } => match kind {
            WitnessKind::OddHadwiger { graph } => {
                let g: Graph = load(&graph, "graph")?;
                let (l, x) = odd_hadwiger_witness(&g)?;
                writeln!(out, "{}", x.to_json()).map_err(io)?;
                let report = verify_odd_expansion(&g, &x);
                writeln!(err, "zigzag length {l}, odd K_{} expansion: {report}", x.order()).map_err(io)?;
            }
            WitnessKind::Dolnikov { hypergraph } => {
                let h: Hypergraph = load(&hypergraph, "hypergraph")?;
                let (t, m) = extract_minor_from_kneser_rep(&h, &limits)?;
                writeln!(out, "{}", m.to_json()).map_err(io)?;
                let report = verify_minor_model(&kneser_graph(&h), &m);
                writeln!(err, "defect {t}, K_{} minor: {report}", m.order()).map_err(io)?;
            }
            WitnessKind::Schrijver { n, k } => {
                let x = schrijver_expansion(n, k)?;
                writeln!(out, "{}", x.to_json()).map_err(io)?;
                let report = verify_odd_expansion(&schrijver(n, k)?, &x);
                writeln!(err, "odd K_{} expansion: {report}", x.order()).map_err(io)?;
            }
        },
        Command::Verify { kind, graph, certificate } => {
            let g: Graph = load(&graph, "graph")?;
            let cert = certificate.unwrap_or_else(|| PathBuf::from("-"));
            let report = match kind {
                CertKind::Expansion => verify_odd_expansion(&g, &load::<OddExpansion>(&cert, "expansion")?),
                CertKind::Minor => verify_minor_model(&g, &load::<MinorModel>(&cert, "minor model")?),
                CertKind::Partition => {
                    verify_partition(&g, &load::<PartitionCertificate>(&cert, "partition")?)
                }
            };
            if !report.is_valid() {
                write!(err, "{report}").map_err(io)?;
            }
            return emit_report(out, &report).map_err(io);
        }
        Command::Export { target: ExportTarget::Dot { graph, expansion, minor, partition } } => {
            let g: Graph = load(&graph, "graph")?;
            let dot = if let Some(path) = expansion {
                to_dot(&g, Overlay::Expansion(&load(&path, "expansion")?))
            } else if let Some(path) = minor {
                to_dot(&g, Overlay::Minor(&load(&path, "minor model")?))
            } else if let Some(path) = partition {
                to_dot(&g, Overlay::Partition(&load(&path, "partition")?))
            } else {
                to_dot(&g, Overlay::None)
            };
            write!(out, "{dot}").map_err(io)?;
        }
        Command::Sweep { config, seed } => {
            let mut config = parse_config(&read_source(&config)?)?;
            if let Some(seed) = seed {
                config.seed = seed;
            }
            let report = run_sweep(&config, &limits);
            writeln!(out, "{}", report.to_json()).map_err(io)?;
            write!(err, "{}", report.table()).map_err(io)?;
            return Ok(if report.passed { Outcome::Ok } else { Outcome::Failed });
        }
    }
    Ok(Outcome::Ok)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => 2,
        Error::SizeLimit { .. } => 3,
        Error::Internal(_) => 1,
    }
}

/// Runs the command line `args` (program name first) against the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let code = match execute(cli, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    let _ = out.flush();
    code
}

/// Runs the command line against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("minorforge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_families() {
        let (code, out, _) = call(&["gen", "schrijver", "5", "2"]);
        assert_eq!(code, 0);
        let g = Graph::from_json(out.trim()).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);

        let (code, out, _) = call(&["gen", "crown", "3", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("graph G {"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["gen", "kneser", "3"]).0, 2);
        assert_eq!(call(&["bounds", "--chi", "--zig", "x.json"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["bounds", "--zig", "/nonexistent/graph.json"]).0, 2);
        // bad parameters surface as input errors
        assert_eq!(call(&["gen", "schrijver", "3", "2"]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("witness"));
    }
}

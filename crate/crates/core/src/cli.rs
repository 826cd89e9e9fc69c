//! The `toricposet` command line.
//!
//! Exit codes: 0 success, 1 a `verify-paper` mismatch, 2 invalid input (a
//! JSON error object is printed on stdout), 64 usage error, 65 size cap hit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::coxeter::{conjugacy_class_elements, coxeter_conjugate, initial_segments, orientation_of, CoxeterSystem};
use crate::error::Error;
use crate::filters::{toric_filters, FilterPoset, LatticeOp};
use crate::fixtures::{fixtures, run_fixtures};
use crate::flipclass::{all_flip_classes_with_cap, DEFAULT_MAX_VERTICES};
use crate::geom::{alpha, reconcile_chamber_bijection, GEOM_MAX_VERTICES};
use crate::graph::{tutte_10, Graph, Orientation, SetPartition};
use crate::io::{self, GraphJson, OrientationJson};
use crate::morph::{is_toric_extension, toric_isomorphic, toric_quotient};
use crate::poset::{closed_face_partition_lattice_with_cap, Poset, FACE_LATTICE_MAX_VERTICES};
use crate::toric::ToricPoset;
use crate::vset::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_CAP: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "toricposet", version, about = "Toric posets: flip classes of acyclic orientations")]
pub struct Cli {
    /// Emit Graphviz DOT instead of JSON where supported.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Vertex cap for exhaustive computations (defaults depend on the command).
    #[arg(long, global = true, value_name = "N")]
    pub max_vertices: Option<usize>,
    /// Directory for memoized outputs, keyed by a hash of the canonical input.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OrientationInput {
    /// Orientation JSON.
    #[arg(long, value_name = "FILE")]
    pub orientation: PathBuf,
    /// Graph JSON, if the orientation file omits vertices and edges.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SystemInput {
    /// Coxeter system JSON.
    #[arg(long, value_name = "FILE")]
    pub system: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Flip classes of all acyclic orientations of a graph.
    Classes {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// List every member of each class.
        #[arg(long)]
        members: bool,
    },
    /// The ordinary poset of an acyclic orientation.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// The toric poset of an orientation's flip class.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Toric filters, ordered by inclusion.
    Filters(OrientationInput),
    /// Contract a toric poset by a partition such as `1,2|3|4`.
    Quotient {
        #[command(flatten)]
        input: OrientationInput,
        #[arg(long, value_name = "PARTITION")]
        partition: String,
    },
    /// Is the `--check` orientation's toric poset an extension of this one?
    Extend {
        #[command(flatten)]
        input: OrientationInput,
        /// Candidate extension over the same vertices; uses its embedded graph if present
        #[arg(long, value_name = "FILE")]
        check: PathBuf,
    },
    /// Toric isomorphism between two toric posets.
    Iso {
        #[command(flatten)]
        input: OrientationInput,
        /// Second orientation JSON, with its own graph embedded
        #[arg(long, value_name = "FILE")]
        other: PathBuf,
    },
    /// Coxeter elements and conjugacy.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
    /// Torus points and toric chambers.
    #[command(subcommand)]
    Geom(GeomCmd),
    /// Run the bundled worked examples.
    VerifyPaper {
        /// Only fixtures in this group, or whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PosetCmd {
    /// Hasse diagram
    Hasse(OrientationInput),
    /// Linear extensions
    Extensions(OrientationInput),
    /// Order ideals
    Ideals(OrientationInput),
    /// Closed face partitions, ordered by refinement
    Facelattice(OrientationInput),
}

#[derive(Subcommand, Debug)]
pub enum ToricCmd {
    /// Toric Hasse diagram
    Hasse(OrientationInput),
    /// Toric transitive closure
    ClosureGraph(OrientationInput),
    /// Toric chains with their cyclic orders
    Chains(OrientationInput),
    /// Toric interval between two vertices
    Interval {
        #[command(flatten)]
        input: OrientationInput,
        i: String,
        j: String,
    },
    /// Whether the vertices form a geometric toric antichain
    Antichain {
        #[command(flatten)]
        input: OrientationInput,
        #[arg(required = true)]
        vertices: Vec<String>,
    },
    /// Total toric extensions, as cyclic words
    Extensions(OrientationInput),
    /// Toric closure of a partition such as `1,3|2|4`
    Clpartition {
        #[command(flatten)]
        input: OrientationInput,
        partition: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CoxeterCmd {
    /// Whether two Coxeter elements are conjugate; prints true or false.
    Conjugate {
        #[command(flatten)]
        input: SystemInput,
        /// Word such as `s1,s2,s3,s4` or "s1 s2 s3 s4"
        w1: String,
        w2: String,
    },
    /// Conjugates of an element, each with all its spellings.
    Class {
        #[command(flatten)]
        input: SystemInput,
        w: String,
    },
    /// Initial segments of an element, as a filter poset.
    Segments {
        #[command(flatten)]
        input: SystemInput,
        w: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GeomCmd {
    /// The orientation (with ties) a torus point induces.
    Alpha {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        point: PathBuf,
    },
    /// Check that sample points cut out exactly the flip classes.
    Reconcile {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
}

/// Failure of a CLI invocation.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Read(PathBuf, String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_INVALID,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Lib(e) => json!({"error": {"kind": e.kind(), "message": e.to_string()}}),
            CliError::Read(p, msg) => {
                json!({"error": {"kind": "ReadError", "message": format!("{}: {msg}", p.display())}})
            }
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Text written to stdout plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses and runs, returning the output instead of printing it.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            };
        }
    };
    let key = match cli.cache.as_ref().map(|_| cache_key(&argv)).transpose() {
        Ok(k) => k,
        Err(e) => return failure(e),
    };
    if let (Some(dir), Some(key)) = (&cli.cache, &key) {
        if let Ok(hit) = fs::read_to_string(dir.join(format!("{key}.out"))) {
            return Outcome { stdout: hit, stderr: String::new(), code: EXIT_OK };
        }
    }
    match dispatch(&cli) {
        Ok((stdout, code)) => {
            let mut stderr = String::new();
            if let (Some(dir), Some(key), EXIT_OK) = (&cli.cache, &key, code) {
                let stored = fs::create_dir_all(dir).and_then(|_| fs::write(dir.join(format!("{key}.out")), &stdout));
                if let Err(e) = stored {
                    stderr = format!("warning: cache not written: {e}\n");
                }
            }
            Outcome { stdout, stderr, code }
        }
        Err(e) => failure(e),
    }
}

fn failure(e: CliError) -> Outcome {
    Outcome {
        stdout: format!("{}\n", serde_json::to_string_pretty(&e.to_json()).expect("serializable")),
        stderr: String::new(),
        code: e.exit_code(),
    }
}

/// Entry point for the binary.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = execute(argv);
    // a closed pipe is not worth reporting
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}

/// Hash of the arguments, with file arguments replaced by their contents
/// (JSON normalized to sorted keys) and `--cache DIR` removed.
fn cache_key(argv: &[OsString]) -> CliResult<String> {
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        let s = a.to_string_lossy();
        if s == "--cache" {
            skip = true;
            continue;
        }
        if s.starts_with("--cache=") {
            continue;
        }
        let p = Path::new(a);
        let part = if p.is_file() {
            let text = read(p)?;
            let canon = serde_json::from_str::<Value>(&text).map(|v| v.to_string()).unwrap_or(text);
            format!("file:{canon}")
        } else {
            format!("arg:{s}")
        };
        h.update((part.len() as u64).to_le_bytes());
        h.update(part.as_bytes());
    }
    Ok(h.finalize().iter().map(|b| format!("{b:02x}")).collect())
}

fn read(p: &Path) -> CliResult<String> {
    fs::read_to_string(p).map_err(|e| CliError::Read(p.to_path_buf(), e.to_string()))
}

fn load_graph(p: &Path) -> CliResult<Arc<Graph>> {
    Ok(Arc::new(io::parse_graph(&read(p)?)?))
}

fn load_orientation(input: &OrientationInput) -> CliResult<Orientation> {
    let graph = input.graph.as_deref().map(load_graph).transpose()?;
    Ok(io::parse_orientation(&read(&input.orientation)?, graph)?)
}

fn load_system(input: &SystemInput) -> CliResult<CoxeterSystem> {
    Ok(io::parse_coxeter(&read(&input.system)?)?)
}

fn pretty(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

fn labels(g: &Graph, s: VertexSet) -> Vec<String> {
    g.set_labels(s)
}

fn word_labels(g: &Graph, w: &[usize]) -> Vec<String> {
    w.iter().map(|&v| g.label(v).to_string()).collect()
}

fn orientation_value(o: &Orientation) -> Value {
    serde_json::to_value(OrientationJson::from_orientation(o)).expect("serializable")
}

fn graph_value(g: &Graph) -> Value {
    serde_json::to_value(GraphJson::from_graph(g)).expect("serializable")
}

fn filter_poset_value(g: &Graph, fp: &FilterPoset) -> Value {
    let failures: Vec<Value> = fp
        .lattice_failures()
        .into_iter()
        .map(|f| {
            json!({
                "op": match f.op { LatticeOp::Meet => "meet", LatticeOp::Join => "join" },
                "a": labels(g, f.a),
                "b": labels(g, f.b),
                "bounds": f.bounds.iter().map(|&s| labels(g, s)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "elements": fp.elements().iter().map(|&s| labels(g, s)).collect::<Vec<_>>(),
        "covers": fp.covers(),
        "size": fp.len(),
        "is_graded": fp.is_graded(),
        "rank_gaps": fp.rank_gaps().iter().map(|&(a, b)| [labels(g, a), labels(g, b)]).collect::<Vec<_>>(),
        "is_lattice": failures.is_empty(),
        "failures": failures,
    })
}

fn parse_vertex(g: &Graph, label: &str) -> CliResult<usize> {
    Ok(g.index_of(label)?)
}

fn dispatch(cli: &Cli) -> CliResult<(String, i32)> {
    let cap = |default: usize| cli.max_vertices.unwrap_or(default);
    let toric = |input: &OrientationInput| -> CliResult<ToricPoset> {
        Ok(ToricPoset::with_cap(&load_orientation(input)?, cap(DEFAULT_MAX_VERTICES))?)
    };
    let out = match &cli.command {
        Command::Classes { graph, members } => {
            let g = load_graph(graph)?;
            let classes = all_flip_classes_with_cap(&g, cap(DEFAULT_MAX_VERTICES))?;
            if cli.dot {
                classes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| io::flip_graph_dot(c, &format!("class{}", i + 1)))
                    .collect()
            } else {
                let list: Vec<Value> = classes
                    .iter()
                    .map(|c| {
                        let mut v = json!({"canonical": orientation_value(c.canonical()), "size": c.len()});
                        if *members {
                            v["members"] = c.members().iter().map(orientation_value).collect();
                        }
                        v
                    })
                    .collect();
                pretty(json!({
                    "graph": graph_value(&g),
                    "count": classes.len(),
                    "tutte_1_0": tutte_10(&g),
                    "classes": list,
                }))
            }
        }
        Command::Poset(cmd) => poset_command(cli, cmd)?,
        Command::Toric(cmd) => toric_command(cli, cmd, &toric)?,
        Command::Filters(input) => {
            let t = toric(input)?;
            let j = toric_filters(&t)?;
            if cli.dot {
                io::filter_poset_dot(t.graph(), &j, "filters")
            } else {
                pretty(filter_poset_value(t.graph(), &j))
            }
        }
        Command::Quotient { input, partition } => {
            let t = toric(input)?;
            let pi = SetPartition::parse(t.graph(), partition)?;
            let q = toric_quotient(&t, &pi)?;
            let rep = q.class().canonical();
            if cli.dot {
                io::orientation_dot(rep, "quotient")
            } else {
                let blocks: serde_json::Map<String, Value> = pi
                    .blocks()
                    .iter()
                    .zip(q.graph().labels())
                    .map(|(&b, name)| (name.clone(), json!(labels(t.graph(), b))))
                    .collect();
                let mut v = orientation_value(rep);
                v["blocks"] = Value::Object(blocks);
                v["class_size"] = json!(q.members().len());
                pretty(v)
            }
        }
        Command::Extend { input, check } => {
            let p = toric(input)?;
            // the candidate usually has more edges; `--graph` only fills in when it embeds none
            let graph = if io::embeds_graph(&read(check)?)? { None } else { input.graph.clone() };
            let q = toric(&OrientationInput { orientation: check.clone(), graph })?;
            pretty(json!({"is_extension": is_toric_extension(&p, &q)?}))
        }
        Command::Iso { input, other } => {
            let p = toric(input)?;
            let q = toric(&OrientationInput { orientation: other.clone(), graph: None })?;
            let phi = toric_isomorphic(&p, &q)?;
            let map = phi.map(|phi| {
                phi.iter()
                    .enumerate()
                    .map(|(i, &j)| (p.graph().label(i).to_string(), json!(q.graph().label(j))))
                    .collect::<serde_json::Map<_, _>>()
            });
            pretty(json!({"isomorphic": map.is_some(), "map": map}))
        }
        Command::Coxeter(cmd) => coxeter_command(cli, cmd)?,
        Command::Geom(GeomCmd::Alpha { graph, point }) => {
            let g = load_graph(graph)?;
            let p = io::parse_point(&read(point)?, &g)?;
            let o = alpha(&g, &p)?;
            if cli.dot {
                io::orientation_dot(&o, "alpha")
            } else {
                pretty(orientation_value(&o))
            }
        }
        Command::Geom(GeomCmd::Reconcile { graph }) => {
            let g = load_graph(graph)?;
            let r = reconcile_chamber_bijection(&g, cap(GEOM_MAX_VERTICES))?;
            pretty(json!({
                "points": r.points,
                "cells": r.cells,
                "classes": r.classes,
                "cell_orientations": r.cell_orientations,
                "cell_points": r.cell_points,
                "consistent": r.cells == r.classes,
            }))
        }
        Command::VerifyPaper { filter } => {
            let outcomes = run_fixtures(&fixtures(), filter.as_deref());
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let list: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    let mut v = json!({"name": o.name, "group": o.group, "anchor": o.anchor, "passed": o.passed});
                    if !o.passed {
                        v["expected"] = json!(o.expected);
                        v["actual"] = json!(o.actual);
                    }
                    v
                })
                .collect();
            let text = pretty(json!({"fixtures": list, "passed": outcomes.len() - failed, "failed": failed}));
            return Ok((text, if failed == 0 { EXIT_OK } else { EXIT_MISMATCH }));
        }
    };
    Ok((out, EXIT_OK))
}

fn poset_command(cli: &Cli, cmd: &PosetCmd) -> CliResult<String> {
    let cap = cli.max_vertices;
    let (input, sub) = match cmd {
        PosetCmd::Hasse(i) => (i, "hasse"),
        PosetCmd::Extensions(i) => (i, "extensions"),
        PosetCmd::Ideals(i) => (i, "ideals"),
        PosetCmd::Facelattice(i) => (i, "facelattice"),
    };
    let o = load_orientation(input)?;
    let p = Poset::from_orientation(&o)?;
    let g = p.graph().clone();
    Ok(match sub {
        "hasse" if cli.dot => io::hasse_dot(&p, "hasse"),
        "hasse" => {
            let covers: Vec<[&str; 2]> = p.cover_relations().iter().map(|&(a, b)| [g.label(a), g.label(b)]).collect();
            pretty(json!({"vertices": g.labels(), "edges": covers, "arcs": covers}))
        }
        "extensions" => {
            let ext = p.linear_extensions(cap.unwrap_or(DEFAULT_MAX_VERTICES))?;
            let words: Vec<Vec<String>> = ext.iter().map(|w| word_labels(&g, w)).collect();
            pretty(json!({"count": words.len(), "linear_extensions": words}))
        }
        "ideals" => {
            let ideals: Vec<Vec<String>> = p.order_ideals().into_iter().map(|s| labels(&g, s)).collect();
            pretty(json!({"count": ideals.len(), "ideals": ideals}))
        }
        _ => {
            let faces = closed_face_partition_lattice_with_cap(&o, cap.unwrap_or(FACE_LATTICE_MAX_VERTICES))?;
            let list: Vec<String> = faces.iter().map(|pi| pi.format(&g)).collect();
            pretty(json!({"count": list.len(), "partitions": list}))
        }
    })
}

fn toric_command(
    cli: &Cli,
    cmd: &ToricCmd,
    toric: &dyn Fn(&OrientationInput) -> CliResult<ToricPoset>,
) -> CliResult<String> {
    Ok(match cmd {
        ToricCmd::Hasse(input) | ToricCmd::ClosureGraph(input) => {
            let t = toric(input)?;
            let closure = t.toric_transitive_closure();
            let rep = t.closure_class()?.canonical().clone();
            let (g, name) = match cmd {
                ToricCmd::Hasse(_) => (Arc::new(t.toric_hasse()?), "toric_hasse"),
                _ => (closure, "toric_closure"),
            };
            let o = rep.restrict_to(g)?;
            if cli.dot {
                io::orientation_dot(&o, name)
            } else {
                pretty(orientation_value(&o))
            }
        }
        ToricCmd::Chains(input) => {
            let t = toric(input)?;
            let g = t.graph().clone();
            let chains: Vec<Value> = t
                .toric_chains()?
                .iter()
                .map(|(s, w)| json!({"set": labels(&g, *s), "order": w.format(&g)}))
                .collect();
            pretty(json!({"count": chains.len(), "chains": chains}))
        }
        ToricCmd::Interval { input, i, j } => {
            let t = toric(input)?;
            let g = t.graph().clone();
            let (a, b) = (parse_vertex(&g, i)?, parse_vertex(&g, j)?);
            pretty(json!({"i": i, "j": j, "interval": labels(&g, t.toric_interval(a, b))}))
        }
        ToricCmd::Antichain { input, vertices } => {
            let t = toric(input)?;
            let g = t.graph().clone();
            let a = g.set_of(vertices)?;
            let witness = t
                .members()
                .iter()
                .zip(t.member_posets())
                .find(|(_, p)| p.is_antichain(a))
                .map(|(m, _)| orientation_value(m));
            pretty(json!({"set": labels(&g, a), "geometric_antichain": witness.is_some(), "witness": witness}))
        }
        ToricCmd::Extensions(input) => {
            let t = toric(input)?;
            let g = t.graph().clone();
            let words: Vec<Value> = t
                .total_toric_extensions()?
                .iter()
                .map(|w| json!({"word": w.labels(&g), "cyclic": w.format(&g)}))
                .collect();
            pretty(json!({"count": words.len(), "extensions": words}))
        }
        ToricCmd::Clpartition { input, partition } => {
            let t = toric(input)?;
            let g = t.graph().clone();
            let pi = SetPartition::parse(&g, partition)?;
            let cl = t.toric_closure(&pi)?;
            pretty(json!({
                "partition": pi.format(&g),
                "closure": cl.format(&g),
                "closed": cl == pi,
                "face_partition": t.is_closed_toric_face_partition(&cl),
            }))
        }
    })
}

fn coxeter_command(cli: &Cli, cmd: &CoxeterCmd) -> CliResult<String> {
    Ok(match cmd {
        CoxeterCmd::Conjugate { input, w1, w2 } => {
            let cs = load_system(input)?;
            let ok = coxeter_conjugate(&cs, &cs.parse_word(w1)?, &cs.parse_word(w2)?);
            pretty(json!(ok))
        }
        CoxeterCmd::Class { input, w } => {
            let cs = load_system(input)?;
            let c = cs.parse_word(w)?;
            let class = conjugacy_class_elements(&cs, &c)?;
            if cli.dot {
                let t = ToricPoset::new(&orientation_of(&cs, &c))?;
                io::flip_graph_dot(t.class(), "conjugacy_class")
            } else {
                let list: Vec<Value> = class
                    .iter()
                    .map(|(o, words)| {
                        json!({
                            "orientation": orientation_value(o),
                            "words": words.iter().map(|x| cs.format_word(x)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                pretty(json!({"count": list.len(), "conjugates": list}))
            }
        }
        CoxeterCmd::Segments { input, w } => {
            let cs = load_system(input)?;
            let j = initial_segments(&cs, &cs.parse_word(w)?)?;
            if cli.dot {
                io::filter_poset_dot(cs.graph(), &j, "segments")
            } else {
                pretty(filter_poset_value(cs.graph(), &j))
            }
        }
    })
}

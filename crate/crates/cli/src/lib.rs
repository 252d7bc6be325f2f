//! The `abchrome` command line.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict, 2 usage or
//! generator error, 3 unparsable input, 4 budget exhausted under `--strict`.

mod batch;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use abchrome::coloring::{is_ab_minimal, is_acyclic, is_proper, AcyclicCheck, MinimalCheck, ProperCheck};
use abchrome::constructions::{self, Construction, ConstructionError};
use abchrome::families::{self, CubicTree, FamilyError, NamedGraph, Sporadic};
use abchrome::solver::{solve, Target};
use abchrome::{emit_graph6, parse_graph6, Coloring, ColoringError, Graph, SearchBudget};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

pub use batch::{BatchRecord, RecordStatus, CSV_HEADER};

#[derive(Debug, Parser)]
#[command(name = "abchrome", version, about = "Acyclic b-colorings of cubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated graph as graph6.
    Gen(GenArgs),
    /// Check a coloring of a graph.
    Check(CheckArgs),
    /// Compute invariants of one graph and print a JSON report.
    Solve(SolveArgs),
    /// Solve every graph6 line of a file.
    Batch(BatchArgs),
    /// Build and verify one of the explicit colorings.
    Construct(ConstructArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: GenFamily,
    /// Write the vertex labels (a JSON array indexed by vertex id) to this file.
    #[arg(long, global = true)]
    pub names: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Generalized Petersen graph G(n,k).
    Petersen { n: usize, k: usize },
    /// (0,j)-prism with two rims of length `rim`.
    Prism0j {
        #[arg(long)]
        rim: usize,
        #[arg(long)]
        j: usize,
    },
    /// The gadget H3.
    H3,
    /// C(T) for a cubic tree T.
    Ct(TreeArg),
    /// petersen, k33, prism3 or g1.
    Sporadic { name: Sporadic },
    /// Every connected cubic graph on `n` vertices (n even, 4..=12), one per line.
    Cubic { n: usize },
}

#[derive(Debug, Args)]
pub struct TreeArg {
    /// Tree edges as `0-1,1-2,1-3`, or `k2` / `star`.
    #[arg(long, default_value = "star")]
    pub tree: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Proper,
    Acyclic,
    Abmin,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// A graph6 file, or a literal graph6 string.
    pub graph: String,
    /// Coloring file: JSON `{"k":..,"colors":[..]}` or whitespace-separated colors.
    pub coloring: PathBuf,
    #[arg(long, value_enum, default_value = "abmin")]
    pub mode: CheckMode,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_ms: Option<u64>,
    /// Exit with code 4 if any value is left undetermined by the budget.
    #[arg(long)]
    pub strict: bool,
    /// Report 0 ms so that output is byte-identical across runs.
    #[arg(long)]
    pub no_timing: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget { max_nodes: self.budget_nodes, max_millis: self.budget_ms, seed: None }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// A graph6 file (first graph), or a literal graph6 string.
    pub graph: String,
    /// Comma-separated subset of A, phi, Ab, conjecture.
    #[arg(long, value_delimiter = ',', default_value = "A,phi,Ab")]
    pub targets: Vec<Target>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// graph6 lines; blank lines and lines starting with `#` are skipped.
    pub input: PathBuf,
    #[arg(long, short)]
    pub output: PathBuf,
    /// CSV, or JSON with one record per line.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    #[arg(long, value_delimiter = ',', default_value = "Ab")]
    pub targets: Vec<Target>,
    #[arg(long, env = "ABCHROME_WORKERS")]
    pub workers: Option<usize>,
    /// Keep existing records in the output and skip their graph6 strings.
    #[arg(long)]
    pub skip_done: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub which: ConstructKind,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Five colors on G(n,k), k >= 3.
    Gp { n: usize, k: usize },
    /// Five colors on a (0,j)-prism.
    Prism0j {
        #[arg(long)]
        rim: usize,
        #[arg(long)]
        j: usize,
    },
    /// Four colors on C(T).
    Ct(TreeArg),
    /// Four colors on the prism G(n,1), n >= 4.
    Prism4 { n: usize },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Construction(#[from] ConstructionError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Construction(_) => 2,
            CliError::Parse(_) => 3,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

pub const EXIT_FALSE: u8 = 1;
pub const EXIT_STRICT: u8 = 4;

/// Runs one command, writing its normal output to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Check(args) => cmd_check(args, out),
        Command::Solve(args) => cmd_solve(args, out),
        Command::Batch(args) => batch::cmd_batch(args, out),
        Command::Construct(args) => cmd_construct(args, out),
    }
}

/// `text` names a file if one exists, otherwise it is graph6 itself.
pub fn read_graph(text: &str) -> Result<Graph, CliError> {
    let path = Path::new(text);
    let source = if path.is_file() { fs::read_to_string(path)? } else { text.to_string() };
    let line = source
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| CliError::Parse(format!("no graph in {text:?}")))?;
    parse_graph6(line).map_err(|e| CliError::Parse(format!("{line:?}: {e}")))
}

fn g6(g: &Graph) -> Result<String, CliError> {
    emit_graph6(g).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_tree(spec: &str) -> Result<CubicTree, CliError> {
    match spec {
        "k2" => return Ok(CubicTree::k2()),
        "star" => return Ok(CubicTree::star()),
        _ => {}
    }
    let mut edges = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part.split_once('-').ok_or_else(|| CliError::Parse(format!("bad tree edge {part:?}")))?;
        let id = |s: &str| s.trim().parse::<usize>().map_err(|e| CliError::Parse(format!("bad tree edge {part:?}: {e}")));
        edges.push((id(a)?, id(b)?));
    }
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    Ok(CubicTree::new(n, edges)?)
}

fn write_names(path: &Path, graph: &NamedGraph) -> Result<(), CliError> {
    fs::write(path, serde_json::to_string_pretty(&graph.names)? + "\n")?;
    Ok(())
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let graph = match args.family {
        GenFamily::Petersen { n, k } => families::gen_petersen(n, k)?,
        GenFamily::Prism0j { rim, j } => families::gen_0j_prism(rim, j)?,
        GenFamily::H3 => families::gen_h3(),
        GenFamily::Ct(t) => families::gen_c_of_t(&parse_tree(&t.tree)?),
        GenFamily::Sporadic { name } => families::gen_sporadic(name).graph,
        GenFamily::Cubic { n } => {
            if n % 2 == 1 || !(4..=12).contains(&n) {
                return Err(CliError::Usage(format!("cubic graphs are enumerated for even n in 4..=12, got {n}")));
            }
            for g in families::connected_cubic_graphs(n) {
                writeln!(out, "{}", g6(&g)?)?;
            }
            return Ok(0);
        }
    };
    writeln!(out, "{}", g6(&graph.graph)?)?;
    if let Some(path) = &args.names {
        write_names(path, &graph)?;
    }
    Ok(0)
}

fn read_coloring(path: &Path) -> Result<Coloring, CliError> {
    let text = fs::read_to_string(path)?;
    Coloring::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn print_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Verdict JSON for one check; `true` iff the coloring passes.
pub fn check_verdict(g: &Graph, c: &Coloring, mode: CheckMode) -> Result<(bool, serde_json::Value), ColoringError> {
    let improper = |edge: (usize, usize)| json!({ "verdict": false, "reason": "improper", "edge": edge });
    let cyclic = |pair, cycle| json!({ "verdict": false, "reason": "cyclic", "pair": pair, "cycle": cycle });
    Ok(match mode {
        CheckMode::Proper => match is_proper(g, c)? {
            ProperCheck::Proper => (true, json!({ "verdict": true })),
            ProperCheck::Conflict { edge } => (false, improper(edge)),
        },
        CheckMode::Acyclic => match is_acyclic(g, c) {
            Ok(AcyclicCheck::Acyclic) => (true, json!({ "verdict": true })),
            Ok(AcyclicCheck::Cycle { pair, cycle }) => (false, cyclic(pair, cycle.vertices)),
            Err(ColoringError::Improper(u, v)) => (false, improper((u, v))),
            Err(e) => return Err(e),
        },
        CheckMode::Abmin => match is_ab_minimal(g, c) {
            Ok(MinimalCheck::Minimal) => (true, json!({ "verdict": true })),
            Ok(MinimalCheck::Step(w)) => (false, json!({ "verdict": false, "reason": "recoloring_step", "witness": w })),
            Err(ColoringError::Improper(u, v)) => (false, improper((u, v))),
            Err(ColoringError::Cyclic { pair, cycle }) => (false, cyclic(pair, cycle.vertices)),
            Err(e) => return Err(e),
        },
    })
}

fn cmd_check(args: CheckArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let g = read_graph(&args.graph)?;
    let c = read_coloring(&args.coloring)?;
    let (ok, verdict) = check_verdict(&g, &c, args.mode).map_err(|e| CliError::Parse(e.to_string()))?;
    print_json(out, &verdict)?;
    Ok(if ok { 0 } else { EXIT_FALSE })
}

fn cmd_solve(args: SolveArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let g = read_graph(&args.graph)?;
    let mut report = solve(&g, &args.targets, &args.budget.budget()).map_err(|e| CliError::Usage(e.to_string()))?;
    if args.budget.no_timing {
        report.millis = 0;
    }
    print_json(out, &report)?;
    Ok(if args.budget.strict && report.budget_exhausted() { EXIT_STRICT } else { 0 })
}

fn construction_json(c: &Construction) -> Result<serde_json::Value, CliError> {
    let names: Vec<&str> = c.designated.iter().map(|&v| c.graph.name(v)).collect();
    Ok(json!({
        "graph6": g6(&c.graph.graph)?,
        "coloring": c.coloring,
        "designated": c.designated,
        "designated_names": names,
        "palettes": c.palettes,
        "chains_rejected": c.chains_rejected,
    }))
}

fn cmd_construct(args: ConstructArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let c = match args.which {
        ConstructKind::Gp { n, k } => constructions::color_gp5(n, k)?,
        ConstructKind::Prism0j { rim, j } => constructions::color_0j_prism5(rim, j)?,
        ConstructKind::Ct(t) => constructions::color_c_of_t4(&parse_tree(&t.tree)?)?,
        ConstructKind::Prism4 { n } => constructions::prism_ab4(n)?,
    };
    print_json(out, &construction_json(&c)?)?;
    Ok(0)
}

//! Command-line front end: `stats`, `simplify`, `compare`, `plot-data`.
//!
//! Exit codes: 0 success (or comparison pass), 1 input error, 2 precondition
//! violation, 3 comparison fail. Diagnostics go to stderr only; identical
//! inputs produce byte-identical stdout.

use crate::compare::{compare_profiles, ToleranceSpec};
use crate::ingest::{export_network, parse_network, prune_islands};
use crate::metrics::{control_centers, statistics_profile, MetricsError, StatisticsProfile};
use crate::model::Network;
use crate::simplify::simplify;
use clap::{Args, Parser, Subcommand};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_COMPARE_FAIL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "commnet", version, about = "Utility communication network statistics toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a statistics profile from canonical node/edge files
    Stats(StatsArgs),
    /// Collapse microwave stations into direct substation connectivity
    Simplify(SimplifyArgs),
    /// Compare a candidate statistics profile against a reference
    Compare(CompareArgs),
    /// Emit the pathlength histogram of a profile as CSV
    PlotData(PlotDataArgs),
}

#[derive(Debug, Args)]
struct StatsArgs {
    /// Nodes CSV file
    #[arg(long, value_name = "PATH")]
    nodes: PathBuf,
    /// Edges CSV file
    #[arg(long, value_name = "PATH")]
    edges: PathBuf,
    /// Control center node ids; defaults to all control_center nodes
    #[arg(long, value_name = "ID,...")]
    controls: Option<String>,
    /// Keep only the largest connected component before computing
    #[arg(long)]
    prune_islands: bool,
    /// Write the profile JSON here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SimplifyArgs {
    /// Nodes CSV file
    #[arg(long, value_name = "PATH")]
    nodes: PathBuf,
    /// Edges CSV file
    #[arg(long, value_name = "PATH")]
    edges: PathBuf,
    /// Keep only the largest connected component before simplifying
    #[arg(long)]
    prune_islands: bool,
    /// Output path for the simplified nodes CSV
    #[arg(long, value_name = "PATH")]
    out_nodes: PathBuf,
    /// Output path for the simplified edges CSV
    #[arg(long, value_name = "PATH")]
    out_edges: PathBuf,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Reference profile JSON
    #[arg(value_name = "REFERENCE")]
    reference: PathBuf,
    /// Candidate profile JSON
    #[arg(value_name = "CANDIDATE")]
    candidate: PathBuf,
    #[arg(long = "tol.matrix_cell", value_name = "FRACTION")]
    tol_matrix_cell: Option<f64>,
    #[arg(long = "tol.ratio", value_name = "FRACTION")]
    tol_ratio: Option<f64>,
    #[arg(long = "tol.adl", value_name = "VALUE")]
    tol_adl: Option<f64>,
    #[arg(long = "tol.skewness", value_name = "VALUE")]
    tol_skewness: Option<f64>,
    #[arg(long = "tol.aebc_relative", value_name = "FRACTION")]
    tol_aebc_relative: Option<f64>,
    /// Emit the report as JSON instead of a text table
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlotDataArgs {
    /// Profile JSON produced by `stats`
    #[arg(value_name = "PROFILE")]
    profile: PathBuf,
    /// Write the CSV here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PRECONDITION,
            message: message.into(),
        }
    }
}

/// Parses `std::env::args` and runs the selected command, returning the
/// process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(args) => cmd_stats(args),
        Command::Simplify(args) => cmd_simplify(args),
        Command::Compare(args) => cmd_compare(args),
        Command::PlotData(args) => cmd_plot_data(args),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|err| Failure::input(format!("cannot read `{}`: {err}", path.display())))
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|err| Failure::input(format!("cannot write `{}`: {err}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|err| Failure::input(format!("cannot write to stdout: {err}")))
        }
    }
}

fn load_network(nodes: &Path, edges: &Path, prune: bool) -> Result<Network, Failure> {
    let nodes_text = read_file(nodes)?;
    let edges_text = read_file(edges)?;
    let network = parse_network(&nodes_text, &edges_text)
        .map_err(|err| Failure::input(err.to_string()))?;
    if !prune {
        return Ok(network);
    }
    let (pruned, report) = prune_islands(&network)
        .map_err(|err| Failure::precondition(err.to_string()))?;
    if !report.removed_node_ids.is_empty() {
        eprintln!(
            "pruned {} island node(s) and {} edge(s); kept component of {}",
            report.removed_node_ids.len(),
            report.removed_edge_ids.len(),
            report.kept_component_size
        );
    }
    Ok(pruned)
}

fn resolve_controls(network: &Network, explicit: Option<&str>) -> Result<Vec<String>, Failure> {
    match explicit {
        Some(list) => {
            let ids: Vec<String> = list.split(',').map(|s| s.trim().to_owned()).collect();
            if ids.iter().any(String::is_empty) {
                return Err(Failure::precondition(
                    "control list contains an empty id".to_owned(),
                ));
            }
            Ok(ids)
        }
        None => {
            let detected = control_centers(network);
            if !detected.is_empty() {
                eprintln!("auto-detected control centers: {}", detected.join(", "));
            }
            Ok(detected)
        }
    }
}

fn metrics_failure(err: MetricsError) -> Failure {
    let hint = match err {
        MetricsError::Disconnected(_) => "; re-run with --prune-islands",
        _ => "",
    };
    Failure::precondition(format!("{err}{hint}"))
}

fn cmd_stats(args: StatsArgs) -> Result<i32, Failure> {
    let network = load_network(&args.nodes, &args.edges, args.prune_islands)?;
    let controls = resolve_controls(&network, args.controls.as_deref())?;
    let profile = statistics_profile(&network, Some(&controls)).map_err(metrics_failure)?;
    write_output(args.out.as_deref(), &format!("{}\n", profile.to_json()))?;
    Ok(EXIT_OK)
}

fn cmd_simplify(args: SimplifyArgs) -> Result<i32, Failure> {
    let network = load_network(&args.nodes, &args.edges, args.prune_islands)?;
    let simplified = simplify(&network);
    let (nodes_text, edges_text) = export_network(&simplified);
    write_output(Some(&args.out_nodes), &nodes_text)?;
    write_output(Some(&args.out_edges), &edges_text)?;
    write_output(
        None,
        &format!(
            "{} nodes, {} edges\n",
            simplified.node_count(),
            simplified.edge_count()
        ),
    )?;
    Ok(EXIT_OK)
}

fn load_profile(path: &Path) -> Result<StatisticsProfile, Failure> {
    let text = read_file(path)?;
    StatisticsProfile::from_json(&text)
        .map_err(|err| Failure::input(format!("malformed profile `{}`: {err}", path.display())))
}

fn cmd_compare(args: CompareArgs) -> Result<i32, Failure> {
    let reference = load_profile(&args.reference)?;
    let candidate = load_profile(&args.candidate)?;
    let mut tolerances = ToleranceSpec::default();
    if let Some(v) = args.tol_matrix_cell {
        tolerances.matrix_cell = v;
    }
    if let Some(v) = args.tol_ratio {
        tolerances.ratio = v;
    }
    if let Some(v) = args.tol_adl {
        tolerances.adl = v;
    }
    if let Some(v) = args.tol_skewness {
        tolerances.skewness = v;
    }
    if let Some(v) = args.tol_aebc_relative {
        tolerances.aebc_relative = v;
    }
    let report = compare_profiles(&reference, &candidate, &tolerances)
        .map_err(|err| Failure::precondition(err.to_string()))?;
    let rendered = if args.json {
        format!("{}\n", report.to_json())
    } else {
        report.to_text()
    };
    write_output(args.out.as_deref(), &rendered)?;
    Ok(if report.overall_pass {
        EXIT_OK
    } else {
        EXIT_COMPARE_FAIL
    })
}

fn cmd_plot_data(args: PlotDataArgs) -> Result<i32, Failure> {
    let profile = load_profile(&args.profile)?;
    write_output(args.out.as_deref(), &profile.psl_histogram.to_csv())?;
    Ok(EXIT_OK)
}

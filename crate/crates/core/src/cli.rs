//! Command-line front end.
//!
//! Every command reads at most one edge list (a path, or stdin when the path
//! is omitted or `-`) and writes exactly one document to stdout. Floats are
//! rounded to 6 significant digits so output is byte-stable.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::contraction::{
    minimize_h_simp, simplified_search_information, tree_contract, ContractionStrategy,
    SimplifiedNetwork, SimplifiedSearchInfo, TrialSample,
};
use crate::error::Error;
use crate::estimator::{PowerLawFit, ScalingConstants, SkeletonEstimate};
use crate::generators::{
    gen_chain, gen_random_tree, gen_ring, rewire_degree_preserving, tree_scaling_experiment,
    TreeScalingRow,
};
use crate::graph::{
    connected_components, cyclomatic_number, load_edge_list, load_partition, quotient_graph,
    to_dot, write_edge_list, Graph,
};
use crate::search_info::{search_info_report, SearchInfoOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "netskel",
    version,
    about = "Search information, tree-contraction skeletons and skeleton-based estimates"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    /// Random contraction trials for `minimize`.
    #[arg(long, global = true, default_value_t = 500,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    /// Link ordering for `contract` (default random) and `estimate` (default degree).
    #[arg(long, global = true, value_enum)]
    pub strategy: Option<Strategy>,

    /// Output format; the default depends on the command.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Include the full source/destination matrix in `search-info`.
    #[arg(long, global = true)]
    pub pairs: bool,

    /// Override a scaling constant, e.g. `--constants inverse_exponent=2.3`.
    #[arg(long = "constants", global = true, value_name = "KEY=VALUE")]
    pub constants: Vec<String>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Node, link, component and cyclomatic counts.
    Info {
        input: Option<PathBuf>,
        /// `LABEL GROUP` file; reports the cyclomatic number of the group network too.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Total, average and per-source search information.
    SearchInfo { input: Option<PathBuf> },
    /// One tree-contraction pass.
    Contract { input: Option<PathBuf> },
    /// Many random contractions; keeps the least and most informative.
    Minimize { input: Option<PathBuf> },
    /// Degree-ordered skeleton and the scaling estimate of the full search information.
    Estimate { input: Option<PathBuf> },
    /// Degree- and connectivity-preserving rewiring.
    Randomize {
        input: Option<PathBuf>,
        /// Swap attempts (default 10 × links).
        #[arg(long)]
        attempts: Option<usize>,
    },
    /// Emit a synthetic graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Mean search information of random trees across sizes, plus a power-law fit.
    TreeScaling {
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        step: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum GenKind {
    Ring {
        n: usize,
    },
    Chain {
        n: usize,
    },
    /// Uniform random labelled tree.
    Tree {
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Random,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

/// Failure of a CLI run, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) | CliError::Io(_) => EXIT_DOMAIN,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdin, stdout, stderr),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            }
        }
    }
}

/// Runs one command. Returns the process exit code.
pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin) {
        Ok(doc) => match stdout
            .write_all(doc.as_bytes())
            .and_then(|_| stdout.flush())
        {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: io error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(e) => {
            let line = e.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "error: {line}");
            e.exit_code()
        }
    }
}

/// Runs one command and returns the document it would print.
pub fn execute(config: &RunConfig, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut constants = ScalingConstants::default();
    for spec in &config.constants {
        constants
            .apply_override(spec)
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }

    match &config.command {
        Command::Info { input, partition } => {
            let format = pick_format(
                config.format,
                OutputFormat::Json,
                &[OutputFormat::Json],
                "info",
            )?;
            debug_assert_eq!(format, OutputFormat::Json);
            let g = read_graph(input, stdin)?;
            let quotient = match partition {
                Some(path) => {
                    let text = read_file(path)?;
                    let p = load_partition(&text, &g)?;
                    let q = quotient_graph(&g, &p)?;
                    Some(QuotientExport {
                        groups: p.group_count(),
                        n: q.node_count(),
                        l: q.link_count(),
                        cyclomatic_number: cyclomatic_number(&q),
                    })
                }
                None => None,
            };
            json(&InfoExport {
                n: g.node_count(),
                l: g.link_count(),
                components: connected_components(&g).count,
                cyclomatic_number: cyclomatic_number(&g),
                quotient,
            })
        }

        Command::SearchInfo { input } => {
            let format = pick_format(
                config.format,
                OutputFormat::Json,
                &[OutputFormat::Json, OutputFormat::Csv],
                "search-info",
            )?;
            let g = read_graph(input, stdin)?;
            let keep_pairs = config.pairs || format == OutputFormat::Csv;
            let report = search_info_report(
                &g,
                SearchInfoOptions {
                    keep_pairs,
                    ..Default::default()
                },
            )?;
            match format {
                OutputFormat::Csv => {
                    let pairs = report.pair_bits.as_ref().expect("pairs requested");
                    let mut out = String::from("source_label,dest_label,bits\n");
                    for (s, row) in pairs.iter().enumerate() {
                        for (d, &bits) in row.iter().enumerate() {
                            if s != d {
                                let _ = writeln!(
                                    out,
                                    "{},{},{}",
                                    csv_field(g.label(s)),
                                    csv_field(g.label(d)),
                                    sig(bits)
                                );
                            }
                        }
                    }
                    Ok(out)
                }
                _ => json(&SearchInfoExport {
                    n: report.n,
                    l: report.l,
                    total_bits: sig(report.total_bits),
                    average_bits: sig(report.average_bits),
                    per_source_bits: report.per_source_bits.iter().map(|&x| sig(x)).collect(),
                    pair_bits: report.pair_bits.filter(|_| config.pairs).map(|m| {
                        m.iter()
                            .map(|r| r.iter().map(|&x| sig(x)).collect())
                            .collect()
                    }),
                }),
            }
        }

        Command::Contract { input } => {
            let format = pick_format(
                config.format,
                OutputFormat::Json,
                &[OutputFormat::Json, OutputFormat::Dot],
                "contract",
            )?;
            let g = read_graph(input, stdin)?;
            let strategy = match config.strategy.unwrap_or(Strategy::Random) {
                Strategy::Random => ContractionStrategy::Random { seed: config.seed },
                Strategy::Degree => ContractionStrategy::DegreeSum,
            };
            let net = tree_contract(&g, &strategy.order(&g))?;
            if format == OutputFormat::Dot {
                return Ok(skeleton_dot(&net));
            }
            let info = simplified_search_information(&net)?;
            json(&SimplificationExport::new(&g, &net, &info, None))
        }

        Command::Minimize { input } => {
            let format = pick_format(
                config.format,
                OutputFormat::Json,
                &[OutputFormat::Json, OutputFormat::Csv, OutputFormat::Dot],
                "minimize",
            )?;
            let g = read_graph(input, stdin)?;
            let m = minimize_h_simp(&g, config.trials as usize, config.seed)?;
            match format {
                OutputFormat::Csv => Ok(samples_csv(&m.samples)),
                OutputFormat::Dot => Ok(skeleton_dot(&m.best.network)),
                OutputFormat::Json => json(&MinimizeExport {
                    trials: config.trials,
                    seed: config.seed,
                    best: SimplificationExport::new(
                        &g,
                        &m.best.network,
                        &m.best.info,
                        Some(m.best.trial),
                    ),
                    worst: SimplificationExport::new(
                        &g,
                        &m.worst.network,
                        &m.worst.info,
                        Some(m.worst.trial),
                    ),
                }),
            }
        }

        Command::Estimate { input } => {
            pick_format(
                config.format,
                OutputFormat::Json,
                &[OutputFormat::Json],
                "estimate",
            )?;
            let g = read_graph(input, stdin)?;
            let strategy = match config.strategy.unwrap_or(Strategy::Degree) {
                Strategy::Random => ContractionStrategy::Random { seed: config.seed },
                Strategy::Degree => ContractionStrategy::DegreeSum,
            };
            let est = estimate_from_graph(&g, strategy, &constants)?;
            json(&SkeletonEstimate {
                h_skeleton: sig(est.h_skeleton),
                ratio: sig(est.ratio),
                estimate_bits: sig(est.estimate_bits),
                low_confidence: est.low_confidence,
            })
        }

        Command::Randomize { input, attempts } => {
            let format = config.format;
            let g = read_graph(input, stdin)?;
            let attempts = attempts.unwrap_or(10 * g.link_count());
            let r = rewire_degree_preserving(&g, attempts, config.seed)?;
            Ok(render_graph(&r, format))
        }

        Command::Gen { kind } => {
            let format = config.format;
            let g = match *kind {
                GenKind::Ring { n } => gen_ring(n)?,
                GenKind::Chain { n } => gen_chain(n)?,
                GenKind::Tree { n } => gen_random_tree(n, config.seed)?,
            };
            Ok(render_graph(&g, format))
        }

        Command::TreeScaling {
            n_min,
            n_max,
            step,
            samples,
        } => {
            let format = pick_format(
                config.format,
                OutputFormat::Csv,
                &[OutputFormat::Csv, OutputFormat::Json],
                "tree-scaling",
            )?;
            let s = tree_scaling_experiment(*n_min, *n_max, *step, *samples, config.seed)?;
            let rows: Vec<TreeScalingRow> = s
                .rows
                .iter()
                .map(|r| TreeScalingRow {
                    mean_bits: sig(r.mean_bits),
                    std_bits: sig(r.std_bits),
                    ..*r
                })
                .collect();
            match format {
                OutputFormat::Csv => {
                    let mut out = String::from("n,mean_bits,std_bits,samples\n");
                    for r in &rows {
                        let _ =
                            writeln!(out, "{},{},{},{}", r.n, r.mean_bits, r.std_bits, r.samples);
                    }
                    Ok(out)
                }
                _ => json(&TreeScalingExport {
                    rows,
                    fit: round_fit(&s.fit),
                }),
            }
        }
    }
}

/// Skeleton estimate of a graph's search information for a given ordering.
pub fn estimate_from_graph(
    g: &Graph,
    strategy: ContractionStrategy,
    constants: &ScalingConstants,
) -> crate::Result<SkeletonEstimate> {
    let net = tree_contract(g, &strategy.order(g))?;
    let h_skeleton = crate::search_info::total_search_information(&net.skeleton)?;
    SkeletonEstimate::new(
        h_skeleton,
        net.skeleton.node_count(),
        g.node_count(),
        constants,
    )
}

/// Rounds to 6 significant digits.
pub fn sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

fn round_fit(f: &PowerLawFit) -> PowerLawFit {
    PowerLawFit {
        amplitude: sig(f.amplitude),
        exponent: sig(f.exponent),
        r_squared: sig(f.r_squared),
        n_points: f.n_points,
    }
}

#[derive(Serialize)]
struct InfoExport {
    n: usize,
    l: usize,
    components: usize,
    cyclomatic_number: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientExport>,
}

#[derive(Serialize)]
struct QuotientExport {
    groups: usize,
    n: usize,
    l: usize,
    cyclomatic_number: usize,
}

#[derive(Serialize)]
struct SearchInfoExport {
    n: usize,
    l: usize,
    total_bits: f64,
    average_bits: f64,
    per_source_bits: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair_bits: Option<Vec<Vec<f64>>>,
}

/// JSON shape of one simplified network.
#[derive(Debug, Serialize)]
pub struct SimplificationExport {
    pub skeleton_edges: Vec<[usize; 2]>,
    pub supernode_members: Vec<Vec<String>>,
    pub h_skeleton: f64,
    pub h_supernodes: Vec<f64>,
    pub h_simp: f64,
    pub trial_index: Option<usize>,
}

impl SimplificationExport {
    pub fn new(
        g: &Graph,
        net: &SimplifiedNetwork,
        info: &SimplifiedSearchInfo,
        trial_index: Option<usize>,
    ) -> Self {
        SimplificationExport {
            skeleton_edges: net.skeleton.links().iter().map(|&(a, b)| [a, b]).collect(),
            supernode_members: net
                .supernodes
                .iter()
                .map(|s| s.members.iter().map(|&v| g.label(v).to_string()).collect())
                .collect(),
            h_skeleton: sig(info.h_skeleton),
            h_supernodes: info.h_supernodes.iter().map(|&x| sig(x)).collect(),
            h_simp: sig(info.h_simp),
            trial_index,
        }
    }
}

#[derive(Serialize)]
struct MinimizeExport {
    trials: u64,
    seed: u64,
    best: SimplificationExport,
    worst: SimplificationExport,
}

#[derive(Serialize)]
struct TreeScalingExport {
    rows: Vec<TreeScalingRow>,
    fit: PowerLawFit,
}

#[derive(Serialize)]
struct GraphExport<'a> {
    n: usize,
    l: usize,
    edges: Vec<[&'a str; 2]>,
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn pick_format(
    requested: Option<OutputFormat>,
    default: OutputFormat,
    allowed: &[OutputFormat],
    command: &str,
) -> Result<OutputFormat, CliError> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!(
            "--format {} is not available for {command}",
            f.to_possible_value().unwrap().get_name()
        )))
    }
}

/// `None` is the plain edge-list format, which pipes into other commands.
fn render_graph(g: &Graph, format: Option<OutputFormat>) -> String {
    match format {
        None => write_edge_list(g),
        Some(OutputFormat::Dot) => to_dot(g, None),
        Some(OutputFormat::Csv) => {
            let mut out = String::from("source,target\n");
            for &(u, v) in g.links() {
                let _ = writeln!(out, "{},{}", csv_field(g.label(u)), csv_field(g.label(v)));
            }
            out
        }
        Some(OutputFormat::Json) => {
            let doc = GraphExport {
                n: g.node_count(),
                l: g.link_count(),
                edges: g
                    .links()
                    .iter()
                    .map(|&(u, v)| [g.label(u), g.label(v)])
                    .collect(),
            };
            json(&doc).expect("graph export serializes")
        }
    }
}

fn skeleton_dot(net: &SimplifiedNetwork) -> String {
    to_dot(&net.skeleton, Some(&net.supernode_sizes()))
}

fn samples_csv(samples: &[TrialSample]) -> String {
    let mut out = String::from("trial,skeleton_nodes,h_skeleton,h_supernodes,h_simp\n");
    for s in samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            s.trial,
            s.skeleton_nodes,
            sig(s.h_skeleton),
            sig(s.h_supernodes),
            sig(s.h_simp)
        );
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_graph(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => read_file(p)?,
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(load_edge_list(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig(6061.234567), 6061.23);
        assert_eq!(sig(24.0), 24.0);
        assert_eq!(sig(1508840.7), 1508840.0);
        assert_eq!(sig(0.000123456789), 0.000123457);
        assert_eq!(sig(0.0), 0.0);
        assert_eq!(sig(-2.5), -2.5);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn format_gate() {
        assert!(pick_format(
            Some(OutputFormat::Dot),
            OutputFormat::Json,
            &[OutputFormat::Json],
            "x"
        )
        .is_err());
        assert_eq!(
            pick_format(None, OutputFormat::Csv, &[OutputFormat::Csv], "x").unwrap(),
            OutputFormat::Csv
        );
    }
}

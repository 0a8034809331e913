use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use xchain::input::{load, FamilySpec, InputError, InputFormat, Source};
use xchain::report::{
    BellJson, BellScanReport, EulerReport, FragmentsReport, GraphSummary, OverlapReport,
    XChainsReport,
};
use xchain::verify::{verify, VerifyOptions};
use xchain_core::euler_bell::{
    bell_operator, euler_bell_scan, is_euler_chain, DEFAULT_MAX_CHAIN_SIZE,
};
use xchain_core::fragments::fragment_fixpoint;
use xchain_core::graph::graph_symmetric_difference;
use xchain_core::oracle::{
    build_graph_state, expectation, inner_product, plus_overlap, MAX_ORACLE_QUBITS,
};
use xchain_core::stabilizer::overlap;
use xchain_core::{Graph, VertexSet};

/// X-chain groups, fragments, Euler chains and Bell inequalities of graph states.
#[derive(Debug, Parser)]
#[command(name = "xchain", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Largest Euler chain enumerated by `bell --scan` and `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CHAIN_SIZE)]
    max_chain_size: usize,

    /// Skip the statevector cross-checks.
    #[arg(long, global = true)]
    no_oracle: bool,

    /// Input file format.
    #[arg(long, global = true, default_value = "auto")]
    input_format: InputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file (edge list or graph6), or `-` for stdin.
    #[arg(conflicts_with = "family", required_unless_present = "family")]
    path: Option<PathBuf>,

    /// Generated graph: star:n, linear:n, cycle:n or complete:n.
    #[arg(long)]
    family: Option<FamilySpec>,
}

impl Input {
    fn source(&self) -> Source {
        match (&self.path, self.family) {
            (_, Some(spec)) => Source::Family(spec),
            (Some(p), None) => Source::from_arg(p),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// X-chain generators, parities and bias degree.
    Xchains(Input),
    /// Overlap <G|H> of two graph states on the same vertices.
    Overlap {
        /// Graph files; `-` reads one of them from stdin.
        paths: Vec<PathBuf>,
        /// Generated graphs, used after the files.
        #[arg(long)]
        family: Vec<FamilySpec>,
    },
    /// X-chain fragments from the merge and exclusion rules.
    Fragments(Input),
    /// Classify a vertex subset as an Euler chain.
    Euler {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based vertices, e.g. 1,2,3.
        #[arg(long)]
        subset: String,
    },
    /// Bell inequality of one Euler chain, or of all negative-parity ones.
    Bell {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based vertices.
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        subset: Option<String>,
        /// Scan every Euler chain up to --max-chain-size.
        #[arg(long)]
        scan: bool,
    },
    /// Cross-check every analysis against brute force and the statevector.
    Verify(Input),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Limit(String),
    Check,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<xchain_core::Error> for Failure {
    fn from(e: xchain_core::Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse_subset(n: usize, text: &str) -> Result<VertexSet, Failure> {
    let mut labels = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Usage(format!("subset entry {part:?} is not a vertex number")))?;
        labels.push(v);
    }
    Ok(VertexSet::try_from_labels(n, labels)?)
}

fn emit<T: Serialize>(format: OutputFormat, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        OutputFormat::Text => print!("{}", text(value)),
    }
}

fn oracle_enabled(cli: &Cli, g: &Graph) -> bool {
    !cli.no_oracle && g.n() <= MAX_ORACLE_QUBITS
}

fn bell_json(
    cli: &Cli,
    g: &Graph,
    r: &xchain_core::euler_bell::BellReport,
) -> Result<BellJson, Failure> {
    let oracle = if oracle_enabled(cli, g) {
        let sv = build_graph_state(g)?;
        let mut q = 0.0;
        for t in &r.operator_terms {
            q += expectation(&sv, t)?;
        }
        Some(q)
    } else {
        None
    };
    Ok(BellJson::new(r, oracle))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Xchains(input) => {
            let g = load(&input.source(), cli.input_format)?;
            let oracle = if oracle_enabled(cli, &g) {
                Some(plus_overlap(&build_graph_state(&g)?))
            } else {
                None
            };
            emit(
                fmt,
                &XChainsReport::new(&g, oracle),
                XChainsReport::render_text,
            );
        }
        Command::Overlap { paths, family } => {
            let mut sources: Vec<Source> = paths.iter().map(|p| Source::from_arg(p)).collect();
            sources.extend(family.iter().map(|&f| Source::Family(f)));
            if sources.len() != 2 {
                return Err(Failure::Usage(format!(
                    "overlap needs exactly two graphs, got {}",
                    sources.len()
                )));
            }
            if sources.iter().filter(|s| **s == Source::Stdin).count() > 1 {
                return Err(Failure::Usage("stdin can supply only one graph".into()));
            }
            let g = load(&sources[0], cli.input_format)?;
            let h = load(&sources[1], cli.input_format)?;
            let d = graph_symmetric_difference(&g, &h)?;
            let oracle = if oracle_enabled(cli, &g) {
                Some(inner_product(
                    &build_graph_state(&g)?,
                    &build_graph_state(&h)?,
                )?)
            } else {
                None
            };
            let report = OverlapReport {
                n: g.n(),
                symmetric_difference: GraphSummary::of(&d),
                overlap: overlap(&g, &h)?.into(),
                oracle_inner_product: oracle,
            };
            emit(fmt, &report, OverlapReport::render_text);
        }
        Command::Fragments(input) => {
            let g = load(&input.source(), cli.input_format)?;
            let report = FragmentsReport::new(&g, &fragment_fixpoint(&g));
            emit(fmt, &report, FragmentsReport::render_text);
        }
        Command::Euler { input, subset } => {
            let g = load(&input.source(), cli.input_format)?;
            let xi = parse_subset(g.n(), subset)?;
            let class = is_euler_chain(&g, &xi)?;
            emit(
                fmt,
                &EulerReport::new(&g, &xi, class),
                EulerReport::render_text,
            );
        }
        Command::Bell {
            input,
            subset,
            scan,
        } => {
            let g = load(&input.source(), cli.input_format)?;
            if *scan {
                let mut reports = Vec::new();
                for r in euler_bell_scan(&g, cli.max_chain_size)? {
                    reports.push(bell_json(cli, &g, &r)?);
                }
                let report = BellScanReport {
                    graph: GraphSummary::of(&g),
                    max_chain_size: cli.max_chain_size,
                    reports,
                };
                emit(fmt, &report, BellScanReport::render_text);
            } else {
                let subset = subset.as_deref().expect("clap requires --subset or --scan");
                let xi = parse_subset(g.n(), subset)?;
                let report = bell_json(cli, &g, &bell_operator(&g, &xi)?)?;
                emit(fmt, &report, BellJson::render_text);
            }
        }
        Command::Verify(input) => {
            let g = load(&input.source(), cli.input_format)?;
            let opts = VerifyOptions {
                oracle: !cli.no_oracle,
                max_chain_size: cli.max_chain_size,
            };
            let report = verify(&g, opts)?;
            emit(fmt, &report, xchain::report::VerifyReport::render_text);
            if !report.passed {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check) => ExitCode::from(3),
    }
}

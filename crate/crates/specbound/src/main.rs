//! Thin command-line front end over [`specbound::cli`]. All data goes to
//! stdout (or `--out`); diagnostics go to stderr with a nonzero exit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use specbound::cli::{
    cmd_analyze, cmd_convert, cmd_family, cmd_survey, write_output, CliConfig, ConvertDirection,
    GraphInput, OutputFormat,
};
use specbound::{Error, Result};

#[derive(Parser)]
#[command(
    name = "specbound",
    version,
    about = "Spectral product-bound toolkit: analyze graphs, verify tight families, \
             survey small orders, convert graph formats"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetFormat {
    Graph6,
    Edges,
}

#[derive(Args)]
struct Common {
    /// Comparison tolerance for equality and inequality decisions
    #[arg(long, default_value_t = 1e-7, value_name = "TOL")]
    tol: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the document to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self, threads: Option<usize>) -> CliConfig {
        CliConfig {
            tolerance: self.tol,
            format: self.format.into(),
            out: self.out.clone(),
            threads,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one connected graph: spectrum, both bounds, equality witness
    Analyze {
        /// A graph6 line, an edge list "n: u-v,u-v,...", or a path to a
        /// file whose first nonempty line is either format
        input: Option<String>,
        /// Build the graph from a family expression instead, e.g.
        /// cone:kneser:5:2 (any number of cone: prefixes over complete,
        /// empty, path, cycle, star, wheel, complete-bipartite,
        /// hypercube, or kneser)
        #[arg(long, value_name = "SPEC", conflicts_with = "input")]
        family: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate, over orders 4..=MAX_N, how often the product bound beats
    /// the independence bound on irregular connected graphs
    Survey {
        /// Largest order to survey (4..=8)
        max_n: usize,
        /// Use a graph6 file as the graph universe instead of the
        /// built-in generator
        #[arg(long, value_name = "PATH")]
        universe: Option<PathBuf>,
        /// Worker threads for per-graph analysis (default: rayon's choice)
        #[arg(long, value_name = "N")]
        threads: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build a named family member and analyze it
    Family {
        /// Family expression, e.g. wheel:9 or cone:hypercube:7
        spec: String,
        /// Assert the closed-form equality/strictness verdict for this
        /// family; a mismatch exits nonzero
        #[arg(long)]
        check_equality: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Convert a file between edge-list and graph6 lines (losslessly)
    Convert {
        /// Input file, one graph per line
        input: PathBuf,
        /// Target format
        #[arg(long, value_enum)]
        to: TargetFormat,
        /// Write converted lines to this file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn resolve_analyze_input(input: Option<String>, family: Option<String>) -> Result<GraphInput> {
    match (input, family) {
        (Some(text), None) => {
            if text.contains(':') {
                Ok(GraphInput::EdgeListLine(text))
            } else if Path::new(&text).exists() {
                Ok(GraphInput::FilePath(text.into()))
            } else {
                Ok(GraphInput::Graph6Line(text))
            }
        }
        (None, Some(spec)) => Ok(GraphInput::Family(spec.parse()?)),
        (None, None) => Err(Error::Input(
            "analyze needs an INPUT argument or --family SPEC".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap forbids this combination"),
    }
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, family, common } => {
            let config = common.config(None);
            let doc = cmd_analyze(&resolve_analyze_input(input, family)?, &config)?;
            write_output(&doc, config.out.as_deref())
        }
        Command::Survey { max_n, universe, threads, common } => {
            let config = common.config(threads);
            let doc = cmd_survey(max_n, universe.as_deref(), &config)?;
            write_output(&doc, config.out.as_deref())
        }
        Command::Family { spec, check_equality, common } => {
            let config = common.config(None);
            let doc = cmd_family(&spec, check_equality, &config)?;
            write_output(&doc, config.out.as_deref())
        }
        Command::Convert { input, to, out } => {
            let direction = match to {
                TargetFormat::Graph6 => ConvertDirection::EdgesToGraph6,
                TargetFormat::Edges => ConvertDirection::Graph6ToEdges,
            };
            let doc = cmd_convert(&input, direction)?;
            write_output(&doc, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

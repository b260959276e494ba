use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use cliquekern::DominanceRule;
use cliquekern_cli::{
    default_rules, run_single, run_suite, RunOptions, SingleSpec, DEFAULT_INPUT_DIR,
    DEFAULT_OUTPUT, DEFAULT_SEED,
};

/// Runs the dominance reductions and reports deletions and timings.
///
/// With no positional arguments the whole suite runs on the graphs in
/// the input directory, generating them first if there are none.
#[derive(Debug, Parser)]
#[command(
    name = "dominate",
    version,
    override_usage = "dominate [OPTIONS]\n       dominate [OPTIONS] <number_of_vertices> <number_of_edges>\n       dominate [OPTIONS] <number_of_vertices> <path_to_the_graph_file>"
)]
struct Cli {
    /// Number of vertices.
    #[arg(value_name = "N")]
    vertices: Option<String>,
    /// Number of edges to generate, or a matrix/DIMACS file with N vertices.
    #[arg(value_name = "M_OR_PATH", requires = "vertices")]
    second: Option<String>,
    /// Generator seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for the parallel passes.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Comma-separated rules: disjoint, vertex, shared.
    #[arg(long, value_delimiter = ',')]
    rules: Option<Vec<DominanceRule>>,
    #[arg(long, default_value = DEFAULT_INPUT_DIR)]
    input_dir: PathBuf,
    #[arg(long, default_value = DEFAULT_OUTPUT)]
    output: PathBuf,
    /// Compare clique numbers of input and kernel on small graphs.
    #[arg(long)]
    oracle_check: bool,
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| usage_error(e));
    let mut opts = RunOptions {
        seed: cli.seed,
        rules: cli.rules.unwrap_or_else(default_rules),
        oracle_check: cli.oracle_check,
        ..RunOptions::default()
    };
    if let Some(w) = cli.workers {
        opts.workers = w as usize;
    }

    let result = match (cli.vertices, cli.second) {
        (None, _) => run_suite(&cli.input_dir, &cli.output, &opts, io::stdout().lock()),
        (Some(n), Some(second)) => match single_spec(&n, &second) {
            Ok(spec) => run_single(&spec, Some(&cli.output), &opts, io::stdout().lock()),
            Err(msg) => usage_error(command().error(ErrorKind::ValueValidation, msg)),
        },
        (Some(_), None) => usage_error(command().error(
            ErrorKind::MissingRequiredArgument,
            "expected an edge count or a graph file after the vertex count",
        )),
    };
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn command() -> clap::Command {
    <Cli as CommandFactory>::command()
}

/// Exits with the error and the usage text; help and version requests exit
/// normally.
fn usage_error(e: clap::Error) -> ! {
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        e.exit();
    }
    let usage = command().render_usage();
    if e.to_string().contains("Usage:") {
        e.exit();
    }
    eprint!("{e}");
    eprintln!("\n{usage}");
    std::process::exit(2);
}

/// A numeric second argument is an edge count unless a file by that name
/// exists.
fn single_spec(n: &str, second: &str) -> Result<SingleSpec, String> {
    let n: usize = n
        .parse()
        .map_err(|_| format!("invalid number of vertices {n:?}"))?;
    let path = PathBuf::from(second);
    match second.parse::<usize>() {
        Ok(m) if !path.exists() => Ok(SingleSpec::Generate { n, m }),
        _ if path.exists() => Ok(SingleSpec::File { n, path }),
        _ if second
            .chars()
            .all(|c| c.is_ascii_digit() || c == '-' || c == '+') =>
        {
            Err(format!("invalid number of edges {second:?}"))
        }
        _ => Err(format!("graph file {second:?} does not exist")),
    }
}

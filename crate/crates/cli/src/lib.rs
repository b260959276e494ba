//! Benchmark driver for the dominance reductions: generates or loads graphs,
//! runs every process type on a fresh copy and reports one row per run.

mod record;
mod speedup;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use cliquekern::{
    generate, io as graph_io, oracle::clique_number, run_pass, DominanceRule, ExecMode, GenSpec,
    GenerateError, Graph, ParseError, ReductionReport,
};
use thiserror::Error;

pub use record::{read_csv, write_csv, write_table, BenchRecord, CSV_HEADER};
pub use speedup::{amdahl_speedup, SpeedupError};

pub const DEFAULT_INPUT_DIR: &str = "data/input";
pub const DEFAULT_OUTPUT: &str = "data/saved_results/result_.csv";
pub const DEFAULT_SEED: u64 = 0x5EED;
/// Vertex counts of the generated suite.
pub const SUITE_SIZES: [usize; 10] = [100, 300, 500, 700, 900, 1100, 1300, 1500, 1700, 1900];
/// Oracle checks are skipped above this many active vertices.
pub const ORACLE_CHECK_CAP: usize = 30;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("{}: {source}", path.display())]
    Load {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{}: declared {declared} vertices but the file holds {actual}", path.display())]
    DimensionMismatch {
        path: PathBuf,
        declared: usize,
        actual: usize,
    },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("writing results: {0}")]
    Csv(#[from] csv::Error),
    #[error("{process}: kernel has clique number {kernel}, input has {input}")]
    OracleMismatch {
        process: String,
        input: usize,
        kernel: usize,
    },
    #[error("no rules selected")]
    NoRules,
}

/// Knobs shared by the suite and single runs.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub seed: u64,
    pub workers: usize,
    pub rules: Vec<DominanceRule>,
    pub oracle_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: DEFAULT_SEED,
            workers: std::thread::available_parallelism().map_or(4, |n| n.get().max(4)),
            rules: default_rules(),
            oracle_check: false,
        }
    }
}

/// Report order: the disjoint-edge rule, then vertex, then shared-edge.
pub fn default_rules() -> Vec<DominanceRule> {
    vec![
        DominanceRule::EdgeDomDisjoint,
        DominanceRule::VertexDom,
        DominanceRule::EdgeDomShared,
    ]
}

/// Process types for `rules`: serial then parallel for each rule.
pub fn process_types(rules: &[DominanceRule], workers: usize) -> Vec<(DominanceRule, ExecMode)> {
    rules
        .iter()
        .flat_map(|&r| {
            [
                (r, ExecMode::Serial),
                (r, ExecMode::parallel(workers.max(1))),
            ]
        })
        .collect()
}

/// Outcome of one process on one graph.
#[derive(Debug, Clone)]
pub struct ProcessRun {
    pub rule: DominanceRule,
    pub exec: ExecMode,
    pub record: BenchRecord,
    pub report: ReductionReport,
    pub kernel: Graph,
}

/// Runs one rule on a copy of `g`. Only the pass itself is timed.
pub fn run_process(g: &Graph, rule: DominanceRule, exec: ExecMode) -> ProcessRun {
    let mut kernel = g.clone();
    let report = run_pass(&mut kernel, rule, exec);
    let record = BenchRecord {
        process_type: exec.label(rule),
        vertex_count: g.n(),
        edge_count: g.edge_count(),
        deleted_edges: report.deleted_edges,
        deleted_vertices: report.deleted_vertices,
        duration: BenchRecord::round_duration(report.duration.as_secs_f64()),
    };
    ProcessRun {
        rule,
        exec,
        record,
        report,
        kernel,
    }
}

/// All process types on one graph, optionally checking each kernel's
/// clique number against the input's.
pub fn run_graph(g: &Graph, opts: &RunOptions) -> Result<Vec<ProcessRun>, SuiteError> {
    if opts.rules.is_empty() {
        return Err(SuiteError::NoRules);
    }
    let input_omega =
        (opts.oracle_check && g.active_count() <= ORACLE_CHECK_CAP).then(|| clique_number(g));
    let mut runs = Vec::new();
    for (rule, exec) in process_types(&opts.rules, opts.workers) {
        let run = run_process(g, rule, exec);
        if let Some(input) = input_omega {
            let kernel = clique_number(&run.kernel);
            if kernel != input {
                return Err(SuiteError::OracleMismatch {
                    process: run.record.process_type,
                    input,
                    kernel,
                });
            }
        }
        runs.push(run);
    }
    Ok(runs)
}

/// What a single run operates on.
#[derive(Debug, Clone)]
pub enum SingleSpec {
    Generate { n: usize, m: usize },
    File { n: usize, path: PathBuf },
}

pub fn load_input(spec: &SingleSpec, seed: u64) -> Result<Graph, SuiteError> {
    match spec {
        SingleSpec::Generate { n, m } => Ok(generate(GenSpec::new(*n, *m, seed)?)?),
        SingleSpec::File { n, path } => {
            let g = graph_io::load_graph(path).map_err(|source| SuiteError::Load {
                path: path.clone(),
                source,
            })?;
            if g.n() != *n {
                return Err(SuiteError::DimensionMismatch {
                    path: path.clone(),
                    declared: *n,
                    actual: g.n(),
                });
            }
            Ok(g)
        }
    }
}

/// One graph, every process type. Records are written to `output` when
/// given and printed to `console`.
pub fn run_single<W: Write>(
    spec: &SingleSpec,
    output: Option<&Path>,
    opts: &RunOptions,
    console: W,
) -> Result<Vec<BenchRecord>, SuiteError> {
    let g = load_input(spec, opts.seed)?;
    let runs = run_graph(&g, opts)?;
    finish(runs, output, console)
}

/// Matrix files in `dir`, sorted by name. A missing directory counts as empty.
fn input_files(dir: &Path) -> Result<Vec<PathBuf>, SuiteError> {
    let entries = match fs::read_dir(dir) {
        Ok(entries) => entries,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(source) => {
            return Err(SuiteError::Io {
                path: dir.into(),
                source,
            })
        }
    };
    let mut files = Vec::new();
    for entry in entries {
        let path = entry
            .map_err(|source| SuiteError::Io {
                path: dir.into(),
                source,
            })?
            .path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Writes the generated suite into `dir`: one matrix file per size, seeded
/// with `seed + n`.
pub fn generate_inputs(dir: &Path, sizes: &[usize], seed: u64) -> Result<Vec<PathBuf>, SuiteError> {
    fs::create_dir_all(dir).map_err(|source| SuiteError::Io {
        path: dir.into(),
        source,
    })?;
    let mut paths = Vec::new();
    for &n in sizes {
        let g = generate(GenSpec::with_default_edges(n, seed.wrapping_add(n as u64))?)?;
        let path = dir.join(format!("graph_{n:04}.txt"));
        graph_io::save_matrix(&g, &path).map_err(|source| SuiteError::Io {
            path: path.clone(),
            source,
        })?;
        paths.push(path);
    }
    Ok(paths)
}

/// Runs every graph in `input_dir`, generating the default suite first if
/// the directory has none. The CSV at `output` is overwritten.
pub fn run_suite<W: Write>(
    input_dir: &Path,
    output: &Path,
    opts: &RunOptions,
    console: W,
) -> Result<Vec<BenchRecord>, SuiteError> {
    run_suite_sizes(input_dir, output, &SUITE_SIZES, opts, console)
}

/// [`run_suite`] with a custom size schedule for generation.
pub fn run_suite_sizes<W: Write>(
    input_dir: &Path,
    output: &Path,
    sizes: &[usize],
    opts: &RunOptions,
    console: W,
) -> Result<Vec<BenchRecord>, SuiteError> {
    let mut files = input_files(input_dir)?;
    if files.is_empty() {
        files = generate_inputs(input_dir, sizes, opts.seed)?;
    }
    let mut runs = Vec::new();
    for path in &files {
        let g = graph_io::load_graph(path).map_err(|source| SuiteError::Load {
            path: path.clone(),
            source,
        })?;
        runs.extend(run_graph(&g, opts)?);
    }
    finish(runs, Some(output), console)
}

fn finish<W: Write>(
    runs: Vec<ProcessRun>,
    output: Option<&Path>,
    mut console: W,
) -> Result<Vec<BenchRecord>, SuiteError> {
    let records: Vec<BenchRecord> = runs.iter().map(|r| r.record.clone()).collect();
    if let Some(path) = output {
        save_csv(&records, path)?;
    }
    let console_err = |source| SuiteError::Io {
        path: "<console>".into(),
        source,
    };
    write_table(&records, &mut console).map_err(console_err)?;
    for line in speedup_summary(&runs) {
        writeln!(console, "{line}").map_err(console_err)?;
    }
    Ok(records)
}

pub fn save_csv(records: &[BenchRecord], path: &Path) -> Result<(), SuiteError> {
    let io_err = |source| SuiteError::Io {
        path: path.into(),
        source,
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io_err)?;
    }
    let file = fs::File::create(path).map_err(io_err)?;
    write_csv(records, io::BufWriter::new(file))?;
    Ok(())
}

/// Per rule and size: observed speedup of the parallel run over the serial
/// one, next to Amdahl's bound where `P` is the parallel run's scan share.
pub fn speedup_summary(runs: &[ProcessRun]) -> Vec<String> {
    let mut lines = Vec::new();
    for par in runs {
        let ExecMode::ParallelSnapshot { workers } = par.exec else {
            continue;
        };
        let n = par.record.vertex_count;
        let Some(ser) = runs.iter().find(|r| {
            r.rule == par.rule && r.exec == ExecMode::Serial && r.record.vertex_count == n
        }) else {
            continue;
        };
        let observed = ratio(ser.report.duration, par.report.duration);
        let p = ratio(par.report.scan_time, par.report.duration).clamp(0.0, 1.0);
        let bound = amdahl_speedup(p, workers.get() as u64).unwrap_or(1.0);
        lines.push(format!(
            "{} n={n}: parallel speedup {observed:.2}x, Amdahl bound {bound:.2}x (P={p:.3}, N={workers})",
            par.rule
        ));
    }
    lines
}

fn ratio(num: Duration, den: Duration) -> f64 {
    if den.is_zero() {
        1.0
    } else {
        num.as_secs_f64() / den.as_secs_f64()
    }
}

//! Command-line frontend. [`dispatch`] parses arguments, runs one
//! subcommand on a worker pool of the configured size, and renders the
//! report as JSON or TSV.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exceeded.

pub mod cache;
mod commands;
pub mod config;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::partition::{Family, Partition};
use crate::stats::ExperimentMode;

pub use cache::{cache_load, cache_path, cache_store, decode_table, encode_table};
pub use commands::Report;
pub use config::{Format, RunConfig, CACHE_DIR_ENV, DEFAULT_CONFIG_FILE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "saxl-lab", version, about = "Exact symmetric group characters and Kronecker coefficients")]
pub struct Cli {
    #[command(flatten)]
    pub globals: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Config file (default: ./saxl-lab.json when present).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output format (default json).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for random experiments.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Character-table cache directory (overrides SAXL_LAB_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Largest π(n) a table or exhaustive scan may touch.
    #[arg(long, global = true)]
    pub max_partitions: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| format!("{e}; write partitions as [4,2,1]"))
}

fn family_arg(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn mode_arg(s: &str) -> Result<ExperimentMode, String> {
    s.parse::<ExperimentMode>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// χ^λ[ν] by the Murnaghan–Nakayama rule.
    Char {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// The full character table of S_n.
    Table { n: usize },
    /// The Kronecker coefficient g(λ, μ, ν).
    Kron {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// The decomposition of χ^μ ⊗ χ^μ.
    Phi {
        #[arg(value_parser = partition_arg)]
        mu: Partition,
    },
    /// Principal-hook certificates: `certify λ μ` or `certify --all μ`.
    Certify {
        #[arg(value_parser = partition_arg)]
        lambda: Option<Partition>,
        #[arg(value_parser = partition_arg)]
        mu: Option<Partition>,
        #[arg(long, value_parser = partition_arg, conflicts_with_all = ["lambda", "mu"])]
        all: Option<Partition>,
    },
    /// Checks that every λ ⊢ n occurs in the tensor square of a family shape.
    Saxl {
        #[arg(long, value_parser = family_arg)]
        family: Family,
        #[arg(long)]
        k: usize,
        /// Resolve uncertified λ with exact Kronecker coefficients.
        #[arg(long)]
        exact: bool,
    },
    /// Partition-counting series.
    #[command(subcommand)]
    Counts(CountsCommand),
    /// Character-table statistics and random experiments.
    #[command(subcommand)]
    Stats(StatsCommand),
    /// The staircase, chopped-square and caret shapes for one k.
    Families {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountsCommand {
    /// π(0..=limit).
    Pi { limit: usize },
    /// π_k(0..=limit), k-tuples of partitions.
    Pik { k: usize, limit: usize },
    /// Partitions into distinct parts from a set or an arithmetic progression.
    Pprime {
        /// Finite part set, e.g. 5,7,9.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["a", "m"])]
        set: Option<Vec<usize>>,
        #[arg(long, requires = "m")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        m: Option<usize>,
        /// Stop the progression after this many further terms.
        #[arg(long, requires = "a")]
        steps: Option<usize>,
        /// Required for infinite progressions; defaults to the full range for a finite set.
        limit: Option<usize>,
    },
    /// Least L with strict monotonicity of π'_R on [L, N/2].
    Threshold {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// The leading asymptotic term for π(n).
    Hr { n: usize },
}

#[derive(Debug, Subcommand)]
pub enum StatsCommand {
    /// Exact fractions of zero entries and of chosen values in the table of S_n.
    Zeros {
        n: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
        values: Vec<i64>,
    },
    /// Vanishing on the principal-hook class of the caret shape.
    Caret { k: usize },
    /// Monte-Carlo zero frequency for random pairs.
    Random {
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, value_parser = mode_arg, default_value = "self-conjugate")]
        mode: ExperimentMode,
    },
}

/// Exit status and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, message: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::error(code, text)
            };
        }
    };
    let cfg = match resolve_config(&cli.globals) {
        Ok(c) => c,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("error: {e}\n")),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("error: cannot start {} workers: {e}\n", cfg.workers)),
    };
    match pool.install(|| commands::run(&cli.command, &cfg)) {
        Ok(Ok(report)) => Outcome {
            code: EXIT_OK,
            stdout: report.render(cfg.format),
            stderr: String::new(),
        },
        Ok(Err(usage)) => Outcome::error(EXIT_USAGE, format!("error: {usage}\n")),
        Err(e) => Outcome::error(exit_code(&e), format!("error: {e}\n")),
    }
}

fn resolve_config(g: &GlobalArgs) -> crate::Result<RunConfig> {
    let mut cfg = RunConfig::load(g.config.as_deref())?;
    if let Some(f) = g.format {
        cfg.format = f;
    }
    if let Some(w) = g.workers {
        cfg.workers = w;
    }
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(d) = &g.cache_dir {
        cfg.cache_dir = Some(d.clone());
    }
    if let Some(m) = g.max_partitions {
        cfg.max_partitions = m;
    }
    if let Some(t) = g.time_limit {
        cfg.time_limit_secs = Some(t);
    }
    Ok(cfg)
}

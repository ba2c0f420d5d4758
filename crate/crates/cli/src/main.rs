use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use earlab_core::Direction;

mod commands;
mod input;
mod output;

use output::{CliError, CommandResult, Status};

const DEFAULT_BUDGET: u64 = 1_000_000;

/// Ear decompositions of strong digraphs and the certificates built on them.
///
/// Every command prints a single JSON document `{status, payload, timing_ms}`
/// on stdout. Exit codes: 0 ok, 1 property failed, 2 invalid input,
/// 3 cap or budget exceeded. Set EARLAB_THREADS to cap worker threads.
#[derive(Parser)]
#[command(name = "earlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Args)]
struct Input {
    /// Edge list or JSON digraph; `-` reads stdin.
    input: String,

    /// JSON decomposition to use instead of searching for one.
    #[arg(long)]
    decomposition: Option<String>,

    /// Node limit for the decomposition search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Find an ear decomposition with every ear at least a given length.
    Decompose {
        input: String,
        #[arg(long, default_value_t = 1)]
        min_ear_length: usize,
        /// Forbid ears that start and end at the same vertex.
        #[arg(long)]
        paths_only: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Strongness, nonseparability and the largest i with membership in LE_i.
    Classify {
        input: String,
        #[arg(long)]
        paths_only: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A vertex whose second out-neighbourhood is at least as large as its first.
    Seymour(Input),
    /// An independent set meeting every longest path.
    Transversal(Input),
    /// A quasi-kernel on at most half the vertices.
    QuasiKernel {
        #[command(flatten)]
        input: Input,
        /// Also run the exhaustive oracle.
        #[arg(long)]
        exact: bool,
    },
    /// Carry kernels across a single ear or trace them through a decomposition.
    Kernel {
        #[command(subcommand)]
        command: KernelCommand,
    },
    /// A proper 3-colouring and bounds on the dichromatic number.
    Color(Input),
    /// A homomorphism into the 6-vertex tournament T.
    Oriented {
        #[command(flatten)]
        input: Input,
        /// Also compute the exact oriented chromatic number up to this order.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Check T, its walk property and its uniqueness.
    #[command(name = "verify-T", alias = "verify-t")]
    VerifyT,
    /// Enumerate all order-6 tournaments for the walk property.
    Census,
    /// Generate an instance.
    Gen(GenArgs),
    /// Exhaustive reference computations.
    Oracle {
        kind: OracleKind,
        input: String,
        #[arg(long, default_value_t = 7)]
        kmax: usize,
    },
}

#[derive(Subcommand)]
enum KernelCommand {
    /// Extend a kernel of a stage across an ear with fresh interior ids.
    Extend(KernelStepArgs),
    /// Restrict a kernel of the stage plus the ear back to the stage.
    Restrict(KernelStepArgs),
    /// Kernel existence at every stage, classified by the dichotomy.
    Trace {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
        direction: DirectionArg,
    },
}

#[derive(Args)]
struct KernelStepArgs {
    /// The stage digraph.
    input: String,
    /// Ear vertices `x0,x1,..,xr`; the interior must be the ids after the
    /// stage's last vertex.
    #[arg(long)]
    ear: String,
    /// The kernel to carry over. Defaults to the smallest one.
    #[arg(long)]
    set: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Backward,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Forward => Direction::Forward,
            DirectionArg::Backward => Direction::Backward,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Kernel,
    QuasiKernel,
    Chromatic,
    Oriented,
    LongestPath,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "family")]
struct GenFamily {
    /// Random digraph with every ear at least this long.
    #[arg(long)]
    le: Option<usize>,
    /// The i-th digraph of the nested family G_i.
    #[arg(long)]
    gi: Option<usize>,
    /// Searched 11-vertex instance with oriented chromatic number 6.
    #[arg(long)]
    tight: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: GenFamily,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    base_length: usize,
    #[arg(long, default_value_t = 3)]
    ears: usize,
    /// Defaults to the minimum plus 2.
    #[arg(long)]
    max_ear_length: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    cycle_ear_probability: f64,
    /// Avoid digons.
    #[arg(long)]
    asymmetric: bool,
    #[arg(long, default_value_t = 2_000_000)]
    budget: u64,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("EARLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::invalid(format!(
                "EARLAB_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::invalid(e.to_string()))
}

fn emit(result: &CommandResult) {
    let text = serde_json::to_string(result).expect("results are serializable");
    // a reader that stops early is not an error
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            e.exit();
        }
        Err(e) => {
            eprint!("{e}");
            let status = Status::InvalidInput;
            emit(&CommandResult {
                status,
                payload: serde_json::json!({ "error": e.kind().to_string() }),
                timing_ms: 0.0,
            });
            std::process::exit(status.exit_code());
        }
    };
    let Format::Json = cli.format;
    let outcome = configure_threads().and_then(|_| commands::run(cli.command));
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    let result = match outcome {
        Ok(reply) => CommandResult {
            status: reply.status,
            payload: reply.payload,
            timing_ms,
        },
        Err(err) => {
            eprintln!("earlab: {}", err.message);
            CommandResult {
                status: err.status,
                payload: serde_json::json!({ "error": err.message }),
                timing_ms,
            }
        }
    };
    emit(&result);
    std::process::exit(result.status.exit_code());
}

//! Command-line driver for the `scavenger` searches and verifier.
//!
//! Every subcommand prints plain text. Hunts and cycle searches print `#`
//! comment lines followed by a certificate or vertex file, so their stdout
//! can be redirected straight into `scavenger verify`.

pub mod commands;
pub mod config;
pub mod input;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use scavenger_core::cycles::{integer_d_limit, SymSearch};
use scavenger_core::qcore::parse_rational;
use scavenger_core::{QPoint3, Rational};

pub use commands::{Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, EXIT_WARN};
pub use config::{RunConfig, WORKERS_ENV};
pub use input::{parse_vertex_file, parse_vertex_text, ParseError, VertexFile};

#[derive(Debug, Parser)]
#[command(
    name = "scavenger",
    version,
    about = "Exact searches for 4-chromatic rational distance graphs"
)]
pub struct Cli {
    /// Worker threads for the parallel searches; results do not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct HuntParams {
    /// Farey height of the default parameter list.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub height: u64,
    /// Explicit comma-separated parameters (rationals or `inf`) instead of the Farey list.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct PoolArgs {
    /// Denominators of the vector pool, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1,3")]
    pub denominators: Vec<u64>,
    /// Coordinate bound for the two free numerators.
    #[arg(long = "pool-height", default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub pool_height: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a certificate or a vertex file; exit 0 pass, 1 fail, 2 pass with warnings.
    Verify { file: PathBuf },
    /// Grow a seed 5-cycle greedily until it is not 3-colorable.
    HuntGreedy {
        /// Vertex file holding the seed cycle and t.
        #[arg(long)]
        seed: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
        denominator: i64,
        /// Candidates have every coordinate in [-box, box].
        #[arg(long = "box", default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
        box_radius: i64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(5..))]
        cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extend a 5-cycle to a 25-vertex Grötzsch-type graph.
    HuntGrotzschType {
        /// Vertex file holding the 5-cycle and t.
        #[arg(long)]
        cycle: PathBuf,
        #[command(flatten)]
        hunt: HuntParams,
    },
    /// Complete a symmetric 5-cycle to an H device.
    HuntGrotzschSubgraph {
        /// Vertex file holding the symmetric 5-cycle and t.
        #[arg(long)]
        cycle: PathBuf,
        #[command(flatten)]
        hunt: HuntParams,
    },
    /// Search a vector pool for a 5-cycle.
    FindCycle {
        t: u64,
        #[command(flatten)]
        pool: PoolArgs,
    },
    /// Search for a 5-cycle symmetric about the bisector of x0, x4.
    FindSymmetricCycle {
        t: u64,
        #[command(flatten)]
        pool: PoolArgs,
        /// Largest integer diagonal tried before fractions; defaults to 4t - 1.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d_bound: Option<u64>,
        /// Pool vectors tried as x4.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        base_limit: u64,
        /// Farey height of the circle parameters tried for x1.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        circle_height: u64,
    },
    /// Smallest squared diagonal d admitting both isosceles triangles.
    ScanD {
        t: u64,
        /// Largest integer diagonal tried before fractions; defaults to 4t - 1.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: Option<u64>,
    },
    /// Decide a x^2 + b y^2 + c z^2 = 0 and print a solution or the failing residue test.
    #[command(allow_negative_numbers = true)]
    SolveLegendre { a: i128, b: i128, c: i128 },
    /// Rational points on the circle at squared distance t from two foci.
    ParamCircle {
        /// Squared distance, a rational.
        t: String,
        /// The two foci, each as "x y z".
        #[arg(long, num_args = 2, allow_hyphen_values = true, required = true)]
        foci: Vec<String>,
        /// A known rational point of the circle; found automatically when absent.
        #[arg(long, allow_hyphen_values = true)]
        known: Option<String>,
        /// Comma-separated parameters ("inf" allowed); overrides --height.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Farey height of the default parameter list.
        #[arg(long, default_value_t = 2)]
        height: u64,
    },
}

fn point(text: &str) -> anyhow::Result<QPoint3> {
    let words: Vec<&str> = text.split_whitespace().collect();
    Ok(QPoint3::parse(&words.join(" "))?)
}

fn dispatch(command: Command, config: &RunConfig) -> anyhow::Result<Outcome> {
    use commands::*;
    match command {
        Command::Verify { file } => verify(&file),
        Command::HuntGreedy {
            seed,
            denominator,
            box_radius,
            cap,
            out,
        } => {
            let config = RunConfig {
                output: out,
                ..config.clone()
            };
            let args = GreedyArgs {
                seed,
                denominator,
                box_radius,
                cap: cap as usize,
            };
            hunt_greedy(&args, &config)
        }
        Command::HuntGrotzschType { cycle, hunt } => {
            let params = parameter_list(hunt.params.as_deref(), hunt.height)?;
            hunt_grotzsch_type(
                &cycle,
                &params,
                &RunConfig {
                    output: hunt.out,
                    ..config.clone()
                },
            )
        }
        Command::HuntGrotzschSubgraph { cycle, hunt } => {
            let params = parameter_list(hunt.params.as_deref(), hunt.height)?;
            hunt_grotzsch_subgraph(
                &cycle,
                &params,
                &RunConfig {
                    output: hunt.out,
                    ..config.clone()
                },
            )
        }
        Command::FindCycle { t, pool } => find_cycle(t, &pool.denominators, pool.pool_height),
        Command::FindSymmetricCycle {
            t,
            pool,
            d_bound,
            base_limit,
            circle_height,
        } => {
            let d_bound = d_bound.unwrap_or_else(|| integer_d_limit(t));
            let search = SymSearch {
                d_bound,
                base_limit: base_limit as usize,
                height: circle_height,
            };
            find_symmetric_cycle(t, &pool.denominators, pool.pool_height, &search)
        }
        Command::ScanD { t, bound } => {
            scan_d_command(t, bound.unwrap_or_else(|| integer_d_limit(t)))
        }
        Command::SolveLegendre { a, b, c } => solve_legendre(a, b, c),
        Command::ParamCircle {
            t,
            foci,
            known,
            params,
            height,
        } => {
            let t: Rational = parse_rational(&t)?;
            let f0 = point(&foci[0])?;
            let f1 = point(&foci[1])?;
            let known = known.as_deref().map(point).transpose()?;
            let params = parameter_list(params.as_deref(), height)?;
            param_circle(&t, [&f0, &f1], known.as_ref(), &params)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code, writing to `stdout` and `stderr`. `workers_env` is the value of
/// [`WORKERS_ENV`], passed in so tests need not touch the environment.
pub fn run(
    args: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    workers_env: Option<String>,
    stdout: &mut impl std::io::Write,
    stderr: &mut impl std::io::Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let config = RunConfig {
        workers: cli.workers.map(|n| n as usize),
        output: None,
    };
    let result = config.with_env(workers_env).and_then(|config| {
        let pool = config.pool()?;
        pool.install(|| dispatch(cli.command, &config))
    });
    match result {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_FAIL
        }
    }
}

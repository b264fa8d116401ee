use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use gapgraph::analytic::ThresholdKind;
use gapgraph::certificate::Certificate;
use gapgraph_cli::commands::{self, parse_sequence};
use gapgraph_cli::{cmd_report, cmd_verify_all, RunConfig};
use serde_json::Value;

/// Prime gap sequences as degree sequences: graphicality, DPG growth and
/// the explicit analytic bounds behind them.
#[derive(Parser, Debug)]
#[command(name = "gapgraph", version, about)]
struct Cli {
    /// Print the certificate as JSON instead of a summary
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sieving and gap statistics
    #[command(subcommand)]
    Primes(PrimesCmd),
    /// Erdős–Gallai checks
    #[command(subcommand)]
    Graphic(GraphicCmd),
    /// Realization and matching
    #[command(subcommand)]
    Graphs(GraphsCmd),
    /// Degree-preserving growth
    #[command(subcommand)]
    Dpg(DpgCmd),
    /// Constants and threshold inequalities
    #[command(subcommand)]
    Analytic(AnalyticCmd),
    /// Checks against a table of zeta zero ordinates
    #[command(subcommand)]
    Zeros(ZerosCmd),
    /// Run every check and write certificates to --out-dir
    VerifyAll(RunArgs),
    /// Render CSV tables from a previous verify-all
    Report {
        #[arg(long, default_value = "gapgraph-out")]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum PrimesCmd {
    /// Sieve to --limit and store the gap cache
    Sieve {
        #[arg(long)]
        limit: u64,
        /// Cache directory (default: $GAPGRAPH_CACHE_DIR or ./gapgraph-out/cache)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Gap histogram, M(x), k_N and S_N
    Stats {
        #[arg(long)]
        limit: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,4,6,8,10")]
        n_values: Vec<u64>,
    },
    /// Dusart's bounds for pi(x) up to --limit
    Dusart {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GraphicCmd {
    /// Test one sequence, e.g. --seq 3,3,2,2
    Check {
        #[arg(long)]
        seq: String,
    },
    /// Test PD_n for every n up to --max-n
    Sweep {
        #[arg(long)]
        max_n: u64,
        #[arg(long, default_value_t = 100)]
        spot_checks: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GraphsCmd {
    /// Havel–Hakimi realization
    Realize {
        #[arg(long)]
        seq: String,
        /// Write the edge list here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum matching of an edge-list file
    Match {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum DpgCmd {
    /// Grow G_start into G_end
    Run {
        #[arg(long, default_value_t = 5)]
        start: u64,
        #[arg(long, default_value_t = 10_000)]
        end: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write one certificate per step (JSON lines)
        #[arg(long)]
        certify: Option<PathBuf>,
    },
    /// Search the sufficient inequality at a single n
    Witness {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
enum AnalyticCmd {
    /// C(alpha), eta(4) and the zero-density absorption ratio
    Constants,
    /// Locate the crossing of a threshold inequality
    Threshold {
        /// case2 or dpg
        #[arg(long)]
        kind: String,
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long, default_value_t = 60.0)]
        hi: f64,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
}

#[derive(Subcommand, Debug)]
enum ZerosCmd {
    /// Zero counts in unit windows against log t
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Truncated explicit formula for psi(x)
    Psi {
        #[arg(long)]
        x: f64,
        #[arg(long = "T")]
        t: f64,
        #[arg(long)]
        file: PathBuf,
    },
    /// Quadrature of the mean-square integral
    Integral {
        #[arg(long)]
        x: f64,
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, default_value_t = 2_000_000)]
    limit: u64,
    #[arg(long, default_value_t = 100_000)]
    max_n: u64,
    #[arg(long, default_value_t = 10_000)]
    dpg_end: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Zero ordinates file; zero checks are skipped without it
    #[arg(long)]
    zeros: Option<PathBuf>,
    #[arg(long, default_value = "gapgraph-out")]
    out_dir: PathBuf,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-3)]
    threshold_tol: f64,
    #[arg(long, default_value_t = 10_000)]
    dusart_grid: usize,
}

impl From<RunArgs> for RunConfig {
    fn from(a: RunArgs) -> Self {
        RunConfig {
            limit: a.limit,
            max_n: a.max_n,
            dpg_end: a.dpg_end,
            seed: a.seed,
            zeros_path: a.zeros,
            out_dir: a.out_dir,
            cache_dir: a.cache_dir,
            threshold_tol: a.threshold_tol,
            dusart_grid: a.dusart_grid,
        }
    }
}

fn run(cmd: Command) -> Result<Certificate> {
    match cmd {
        Command::Primes(PrimesCmd::Sieve { limit, cache_dir }) => {
            let dir = cache_dir.unwrap_or_else(|| RunConfig::default().cache_dir());
            commands::primes_sieve(limit, &dir)
        }
        Command::Primes(PrimesCmd::Stats { limit, n_values }) => commands::primes_stats(limit, &n_values),
        Command::Primes(PrimesCmd::Dusart { limit, grid }) => commands::primes_dusart(limit, grid),
        Command::Graphic(GraphicCmd::Check { seq }) => commands::graphic_check(&parse_sequence(&seq)?),
        Command::Graphic(GraphicCmd::Sweep { max_n, spot_checks, seed }) => {
            commands::graphic_sweep_cmd(max_n, spot_checks, seed)
        }
        Command::Graphs(GraphsCmd::Realize { seq, out }) => {
            commands::graphs_realize(&parse_sequence(&seq)?, out.as_deref())
        }
        Command::Graphs(GraphsCmd::Match { input }) => commands::graphs_match(&input),
        Command::Dpg(DpgCmd::Run { start, end, seed, certify }) => {
            commands::dpg_run_cmd(start, end, seed, certify.as_deref())
        }
        Command::Dpg(DpgCmd::Witness { n }) => commands::dpg_witness_cmd(n),
        Command::Analytic(AnalyticCmd::Constants) => commands::analytic_constants(),
        Command::Analytic(AnalyticCmd::Threshold { kind, lo, hi, tol }) => {
            let kind: ThresholdKind = kind.parse()?;
            let lo = lo.unwrap_or(if kind == ThresholdKind::Case2 { 28.0 } else { 32.0 });
            commands::threshold_report(kind, lo, hi, tol)
        }
        Command::Zeros(ZerosCmd::Check { file }) => commands::zeros_check(&file),
        Command::Zeros(ZerosCmd::Psi { x, t, file }) => commands::zeros_psi(&file, x, t),
        Command::Zeros(ZerosCmd::Integral { x, t, delta, tol, file }) => {
            commands::zeros_integral(&file, x, t, delta, tol)
        }
        Command::VerifyAll(args) => cmd_verify_all(&args.into()),
        Command::Report { out_dir } => {
            let config = RunConfig {
                out_dir,
                ..RunConfig::default()
            };
            let files = cmd_report(&config)?;
            Ok(Certificate::new(
                "report",
                serde_json::json!({ "out_dir": config.out_dir }),
                serde_json::json!({ "written": files }),
                vec![],
                gapgraph_cli::timestamp(),
            ))
        }
    }
}

/// One line per top-level result; long arrays are summarized by length.
fn print_summary(c: &Certificate) {
    println!("{}: {}", c.command, if c.pass { "PASS" } else { "FAIL" });
    if let Value::Object(map) = &c.results {
        for (k, v) in map {
            let text = v.to_string();
            match v {
                Value::Array(items) if text.len() > 160 => println!("  {k}: [{} items]", items.len()),
                _ if text.len() > 160 => println!("  {k}: {}...", &text[..text.floor_char_boundary(157)]),
                _ => println!("  {k}: {text}"),
            }
        }
    }
    for f in &c.failures {
        println!("  failed: {f}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(c) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&c).expect("certificate serializes"));
            } else {
                print_summary(&c);
            }
            if c.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end: single constructions, divisor tables and
//! verification sweeps with text, JSON or CSV output.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{cmd_atlas, prime_pairs, SweepError};
pub use report::{Cell, Layout, Report, Row, Status};

/// Exit code for malformed invocations.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanTarget {
    Phi,
    Psi,
}

/// Knobs shared by every sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub prime_cap_p: u64,
    pub prime_cap_q: u64,
    pub degree_budget: u64,
    pub workers: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            prime_cap_p: 50,
            prime_cap_q: 50,
            degree_budget: DEFAULT_DEGREE_BUDGET,
            workers: 1,
            output_format: OutputFormat::Text,
            output_path: None,
        }
    }
}

pub const DEFAULT_DEGREE_BUDGET: u64 = 1_000_000;
pub const DEFAULT_DIVISOR_BUDGET: u64 = 1 << 16;

#[derive(Debug, Parser)]
#[command(
    name = "cyclodiv",
    version,
    about = "Cyclotomic polynomials and the divisors of x^n - 1"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    /// Worker threads for sweeps [default: available parallelism].
    #[arg(long, env = "CYCLODIV_WORKERS", global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Largest polynomial degree (n, or p^2 q for the atlas) a command may build.
    #[arg(long, default_value_t = DEFAULT_DEGREE_BUDGET, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub degree_budget: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Include the full dense coefficient list for phi and psi.
    #[arg(long, global = true)]
    pub dense: bool,
    /// Record wall-clock time in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Suppress progress messages on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the cyclotomic polynomial Φ_n.
    Phi { n: u64 },
    /// Build the inverse cyclotomic polynomial Ψ_n = (x^n - 1)/Φ_n.
    Psi { n: u64 },
    /// Tabulate every monic divisor of x^n - 1.
    Divisors {
        n: u64,
        /// Refuse when x^n - 1 has more monic divisors than this.
        #[arg(long, default_value_t = DEFAULT_DIVISOR_BUDGET)]
        max_divisors: u64,
    },
    /// Compare predicted and computed coefficient sets for all divisors of
    /// x^{p^2 q} - 1 over a range of prime pairs.
    Atlas {
        #[arg(long, default_value_t = 50)]
        max_p: u64,
        #[arg(long, default_value_t = 50)]
        max_q: u64,
    },
    /// B, B_+, B_-, B' and C for each n in a range, with closed-form checks.
    Heights {
        from: u64,
        to: u64,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_BUDGET)]
        max_divisors: u64,
    },
    /// List n whose Φ_n or Ψ_n is not coefficient convex.
    ConvexityScan {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value_t = ScanTarget::Psi)]
        target: ScanTarget,
    },
    /// Count flat monic divisors of x^n - 1 for each n in a range.
    FlatCount {
        from: u64,
        to: u64,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_BUDGET)]
        max_divisors: u64,
    },
}

impl Cli {
    pub fn sweep_config(&self) -> SweepConfig {
        let (prime_cap_p, prime_cap_q) = match self.command {
            Command::Atlas { max_p, max_q } => (max_p, max_q),
            _ => (0, 0),
        };
        SweepConfig {
            prime_cap_p,
            prime_cap_q,
            degree_budget: self.degree_budget,
            workers: self.workers.map_or_else(
                || std::thread::available_parallelism().map_or(1, |n| n.get()),
                |w| w as usize,
            ),
            output_format: self.format,
            output_path: self.output.clone(),
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let config = cli.sweep_config();
    let started = Instant::now();
    let mut report = match commands::dispatch(&cli, &config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    if cli.timing {
        let millis = started.elapsed().as_millis();
        report.elapsed_millis = Some(millis);
        let _ = writeln!(stderr, "elapsed: {millis} ms");
    }
    let _ = writeln!(stderr, "{}", report.summary_line());

    let rendered = report.render(config.output_format);
    let written = match &config.output_path {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => stdout.write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    report.status().code()
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hilbert_strip::report::{write_csv, write_json};
use hilbert_strip::VerificationReport;
use hilbert_strip_verify::commands::{
    self, ConjectureArgs, FigureArgs, HilbertArgs, IdentitiesArgs,
};
use hilbert_strip_verify::{exit, tolerance_scale_from_env, CliError};

/// Numerical verification of the strip Hilbert transform, its kernel, and
/// the theta-function identities behind `β_d(π/2) ≥ 1`.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// Emit reports as a JSON array instead of CSV.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positivity and monotonicity of β_d(π/2) − 1 on a log-spaced grid.
    Conjecture {
        #[arg(long, default_value_t = 0.05)]
        x_min: f64,
        #[arg(long, default_value_t = 20.0)]
        x_max: f64,
        #[arg(long, default_value_t = 1000)]
        points: usize,
    },
    /// Two-squares, modular transformation, limit, lemma and convention checks.
    Identities {
        #[arg(long, default_value_t = 200)]
        n_coeff: u64,
        #[arg(long, default_value_t = 1_000_000)]
        n_limit: u64,
    },
    /// Writes the β_d(π/2) curve as CSV and SVG.
    Figure {
        #[arg(long, default_value_t = 4.0)]
        x_max: f64,
        #[arg(long, default_value_t = 400)]
        points: usize,
        #[arg(long, default_value = "figure1.csv")]
        csv: PathBuf,
        #[arg(long, default_value = "figure1.svg")]
        svg: PathBuf,
    },
    /// Compares the multiplier and convolution routes for one function.
    Hilbert {
        #[arg(long)]
        depth: f64,
        /// Terms such as "a1=1,b3=0.5" (a: cosine, b: sine).
        #[arg(long = "function", allow_hyphen_values = true)]
        function: String,
        #[arg(long, default_value_t = 2048)]
        grid: usize,
    },
    /// Every suite at default settings.
    All {
        /// Directory for the figure files.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

fn run(command: Command) -> Result<Vec<VerificationReport>, CliError> {
    match command {
        Command::Conjecture {
            x_min,
            x_max,
            points,
        } => commands::conjecture(ConjectureArgs {
            x_min,
            x_max,
            points,
        }),
        Command::Identities { n_coeff, n_limit } => {
            commands::identities(IdentitiesArgs { n_coeff, n_limit })
        }
        Command::Figure {
            x_max,
            points,
            csv,
            svg,
        } => commands::figure(&FigureArgs {
            x_max,
            points,
            csv,
            svg,
        }),
        Command::Hilbert {
            depth,
            function,
            grid,
        } => commands::hilbert(&HilbertArgs {
            depth,
            function,
            grid,
        }),
        Command::All { out_dir } => commands::all(&out_dir),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::BAD_ARGUMENTS as u8
            } else {
                exit::PASS as u8
            });
        }
    };

    let outcome = tolerance_scale_from_env().and_then(|scale| {
        run(cli.command).map(|rows| {
            rows.into_iter()
                .map(|r| r.scale_tolerance(scale))
                .collect::<Vec<_>>()
        })
    });
    let rows = match outcome {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = if cli.json {
        write_json(&mut out, &rows)
    } else {
        write_csv(&mut out, &rows)
    };
    if let Err(e) = written.and_then(|_| out.flush()) {
        eprintln!("verify: i/o failure: {e}");
        return ExitCode::from(exit::IO_FAILURE as u8);
    }

    let failed = rows.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        eprintln!("verify: {failed} of {} checks failed", rows.len());
        ExitCode::from(exit::CHECK_FAILED as u8)
    } else {
        ExitCode::from(exit::PASS as u8)
    }
}

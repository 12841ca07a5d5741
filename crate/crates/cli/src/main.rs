//! Command-line front end: evaluate invariants on state files, run the
//! verification suites, analyze balancedness, contract patterns, estimate
//! family ranks and integrate the momentum-eigenstate evolution.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes: 0 success, 1 failed checks, 2 malformed state file,
/// 3 unknown invariant name, 4 pattern error.
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_BAD_STATE: u8 = 2;
pub const EXIT_UNKNOWN_NAME: u8 = 3;
pub const EXIT_BAD_PATTERN: u8 = 4;

#[derive(Parser)]
#[command(
    name = "spinv",
    about = "Locally Lorentz invariant spinor entanglement indicators",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Random seed for samplers.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance override for checks.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate named invariants on one or more state files.
    Eval {
        /// State file(s) in the JSON schema {"particles": n, "coefficients": [[re, im], ..]}.
        #[arg(long, required = true)]
        state: Vec<std::path::PathBuf>,
        /// Comma-separated invariant names (default: all for the particle count).
        #[arg(long)]
        names: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a verification suite.
    Check {
        /// Suite: algebra | invariance | examples | oracle | rank | dependencies | reductions | balance | dynamics | all.
        suite: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Weight vectors and balancedness verdicts for a state file.
    Balance {
        #[arg(long, required = true)]
        state: Vec<std::path::PathBuf>,
        /// Number of random local-rotation frames to sweep.
        #[arg(long, default_value_t = 50)]
        frames: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Parse and evaluate a contraction pattern on a state file.
    Contract {
        /// Pattern text, e.g. "g0[l i] g0[m j] g0[n k] Psi*[i j k] Psi[l m n]".
        pattern: String,
        #[arg(long)]
        state: std::path::PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Numeric rank of an invariant family.
    Rank {
        /// Family: 2p-2-2 | 2p-3-1 | 3p-2-2-selected | 3p-3-1, or --names CSV.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        names: Option<String>,
        /// Number of random states (default: 2x names + 10).
        #[arg(long)]
        states: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Integrate the reduced Dirac evolution and emit CSV of the forms.
    Evolve {
        #[arg(long, default_value_t = 0.0)]
        t0: f64,
        #[arg(long, default_value_t = 10.0)]
        t1: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 0.0)]
        charge: f64,
        /// Pseudoscalar coupling constant.
        #[arg(long, default_value_t = 0.0)]
        coupling: f64,
        /// Momentum components "px,py,pz".
        #[arg(long, default_value = "0,0,0")]
        momentum: String,
        /// Constant potentials A0..A3 and the pseudoscalar field.
        #[arg(long, default_value_t = 0.0)]
        a0: f64,
        #[arg(long, default_value_t = 0.0)]
        a1: f64,
        #[arg(long, default_value_t = 0.0)]
        a2: f64,
        #[arg(long, default_value_t = 0.0)]
        a3: f64,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// First spinor, eight comma-separated reals re0,im0,..,re3,im3.
        #[arg(long, default_value = "1,0,0,0,0,0,0,0")]
        psi0: String,
        /// Second spinor, same encoding.
        #[arg(long, default_value = "0,0,1,0,0,0,0,0")]
        phi0: String,
        /// Two-particle state file for the invariant columns
        /// (default: the maximally entangled pair).
        #[arg(long)]
        state: Option<std::path::PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            state,
            names,
            common,
        } => commands::eval(&state, names.as_deref(), &common),
        Command::Check { suite, common } => commands::check(&suite, &common),
        Command::Balance {
            state,
            frames,
            common,
        } => commands::balance(&state, frames, &common),
        Command::Contract {
            pattern,
            state,
            common,
        } => commands::contract(&pattern, &state, &common),
        Command::Rank {
            family,
            names,
            states,
            common,
        } => commands::rank(family.as_deref(), names.as_deref(), states, &common),
        Command::Evolve {
            t0,
            t1,
            dt,
            mass,
            charge,
            coupling,
            momentum,
            a0,
            a1,
            a2,
            a3,
            phi,
            psi0,
            phi0,
            state,
            common,
        } => commands::evolve(
            commands::EvolveArgs {
                t0,
                t1,
                dt,
                mass,
                charge,
                coupling,
                momentum,
                a0,
                a1,
                a2,
                a3,
                phi,
                psi0,
                phi0,
                state,
            },
            &common,
        ),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

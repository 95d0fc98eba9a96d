//! `spatial-claims` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a claim mismatches or a verification or
//! search fails, 2 on usage and input errors.

mod commands;
mod style;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "spatial-claims",
    version,
    about = "Check claims about the counter game and rectilinear polygons"
)]
struct Cli {
    /// Worker threads for the search engines (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<std::num::NonZeroUsize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The no-adjacent counter game.
    #[command(subcommand)]
    Game(GameCommand),
    /// Equilateral polygons with 90° and 270° corners.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Find a plane-tiling certificate for one polygon.
    Tile(TileArgs),
    /// The claims harness.
    #[command(subcommand)]
    Claims(ClaimsCommand),
}

#[derive(Debug, Subcommand)]
enum GameCommand {
    /// Winner of the empty row and its Grundy value.
    Winner {
        #[arg(long, value_name = "N")]
        spaces: u32,
    },
    /// Grundy values g[0..=N].
    Grundy {
        #[arg(long, value_name = "N")]
        max: usize,
        /// Search the computed prefix for a certified period.
        #[arg(long)]
        detect_period: bool,
        /// Also write the values (and period) as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Exhaustively check the centre-and-mirror strategy on every odd row.
    VerifyMirror {
        #[arg(long, value_name = "N")]
        max_odd: u32,
    },
    /// Analyse a position: Grundy value, winner to move, optimal move.
    Board {
        #[arg(long, value_name = "N")]
        length: u32,
        /// Occupied cells, 1-based.
        #[arg(long, value_delimiter = ',', value_name = "CELLS")]
        counters: Vec<u32>,
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum PolyCommand {
    /// List every polygon with the given number of sides, up to congruence.
    Enumerate {
        #[arg(long, value_name = "N")]
        sides: usize,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write one SVG per polygon into this directory.
        #[arg(long, value_name = "DIR")]
        svg: Option<PathBuf>,
    },
    /// Validate a turn word and print its properties.
    Props {
        #[arg(long, value_name = "WORD")]
        turns: String,
        /// Print the properties as JSON instead.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Boundary-word factorization (translations only).
    Bn,
    /// Torus exact cover with all eight orientations.
    Torus,
    /// Factorization first, then the torus search.
    Auto,
}

#[derive(Debug, Args)]
struct TileArgs {
    #[arg(long, value_name = "WORD")]
    turns: String,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Bound on torus sides and on the reduced period vectors.
    #[arg(long, value_name = "K", default_value_t = spatial_claims::tiling::DEFAULT_MAX_DIM)]
    max_torus: usize,
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
    /// Copies of the fundamental domain per side in the figure.
    #[arg(long, value_name = "N", default_value_t = 3)]
    repeats: usize,
    /// Write the certificate as JSON.
    #[arg(long, value_name = "PATH")]
    cert: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum ClaimsCommand {
    /// Run the builtin registry plus any claims loaded from a file.
    Run {
        /// JSON array of extra claims.
        #[arg(long, value_name = "FILE")]
        claims: Option<PathBuf>,
        /// Run only the loaded claims.
        #[arg(long, requires = "claims")]
        no_builtin: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        md: Option<PathBuf>,
        /// Record per-claim runtimes (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print the builtin registry as a claim file.
    List,
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        spatial_claims::exec::set_threads(n.get()).map_err(Failure::usage)?;
    }
    match cli.command {
        Command::Game(GameCommand::Winner { spaces }) => commands::game_winner(spaces),
        Command::Game(GameCommand::Grundy {
            max,
            detect_period,
            json,
        }) => commands::game_grundy(max, detect_period, json.as_deref()),
        Command::Game(GameCommand::VerifyMirror { max_odd }) => commands::verify_mirror(max_odd),
        Command::Game(GameCommand::Board {
            length,
            counters,
            svg,
        }) => commands::game_board(length, &counters, svg.as_deref()),
        Command::Poly(PolyCommand::Enumerate { sides, json, svg }) => {
            commands::poly_enumerate(sides, json.as_deref(), svg.as_deref())
        }
        Command::Poly(PolyCommand::Props { turns, json }) => commands::poly_props(&turns, json),
        Command::Tile(args) => commands::tile(&args),
        Command::Claims(ClaimsCommand::Run {
            claims,
            no_builtin,
            out,
            md,
            timings,
        }) => commands::claims_run(
            claims.as_deref(),
            no_builtin,
            out.as_deref(),
            md.as_deref(),
            timings,
        ),
        Command::Claims(ClaimsCommand::List) => commands::claims_list(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

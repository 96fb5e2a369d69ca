//! The `indicolor` command: `chromatic`, `play`, `solve` and `serve`.
//!
//! Exit codes: 0 on success (and when Alice wins a game), 3 when Bob wins a
//! game, 2 for usage, parse and input errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use indicolor::format::parse_matroid;
use indicolor::game::{GameState, Mode, Role};
use indicolor::oracle::{solve_indicated, solve_modified};
use indicolor::play::{alice_for, run_game, AliceKind, BobKind, GameConfig};
use indicolor::transcript::Transcript;
use indicolor::union::{chromatic_number, Palette, UnionError};
use indicolor::Matroid;

pub mod human;
pub mod server;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_BOB_WINS: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "indicolor",
    version,
    about = "Indicated coloring games on matroids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the least number of independent sets covering the ground set.
    Chromatic { file: PathBuf },
    /// Play one game and print its transcript as JSON.
    Play(PlayArgs),
    /// Print the winner of the game under optimal play.
    Solve(SolveArgs),
    /// Serve games against the engine over HTTP.
    Serve {
        #[arg(long)]
        port: u16,
    },
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    /// Matroid file; every color uses this matroid.
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    #[arg(long)]
    pub colors: Option<usize>,
    /// One matroid file per color, all on the same ground set.
    #[arg(long, num_args = 1..)]
    pub matroids: Vec<PathBuf>,
    #[arg(long)]
    pub modified: bool,
    #[arg(long, value_enum, default_value_t = AliceArg::Engine)]
    pub alice: AliceArg,
    #[arg(long, value_enum, default_value_t = BobArg::Random)]
    pub bob: BobArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the transcript to this file.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub matroid: PathBuf,
    #[arg(long)]
    pub colors: usize,
    #[arg(long)]
    pub modified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AliceArg {
    Engine,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BobArg {
    Random,
    FirstFit,
    Adversarial,
    Human,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code() as u8;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Chromatic { file } => {
            let matroid = load(&file)?;
            match chromatic_number(&matroid) {
                Ok(chi) => println!("{chi}"),
                Err(UnionError::Loopy(loops)) => {
                    bail!("matroid has loops {loops:?}; no number of colors covers it")
                }
                Err(e) => return Err(e.into()),
            }
            Ok(EXIT_OK)
        }
        Command::Play(args) => play(args),
        Command::Solve(args) => {
            let matroid = load(&args.matroid)?;
            let palette = Palette::copies(&matroid, args.colors);
            let winner = if args.modified {
                solve_modified(&palette)
            } else {
                solve_indicated(&palette)
            }?;
            println!("{winner}");
            Ok(EXIT_OK)
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Runtime::new().context("starting the async runtime")?;
            runtime.block_on(server::serve(port))?;
            Ok(EXIT_OK)
        }
    }
}

pub fn load(path: &Path) -> anyhow::Result<Matroid> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_matroid(&text).with_context(|| format!("parsing {}", path.display()))
}

fn palette(args: &PlayArgs) -> anyhow::Result<Palette> {
    match (&args.matroid, args.colors, args.matroids.as_slice()) {
        (Some(file), Some(k), []) => Ok(Palette::copies(&load(file)?, k)),
        (None, None, files) if !files.is_empty() => {
            let matroids = files
                .iter()
                .map(|f| load(f))
                .collect::<anyhow::Result<Vec<_>>>()?;
            Ok(Palette::new(matroids)?)
        }
        _ => bail!("give either --matroid FILE --colors K or --matroids FILE..."),
    }
}

fn play(args: PlayArgs) -> anyhow::Result<u8> {
    let palette = palette(&args)?;
    let mode = if args.modified {
        Mode::Modified
    } else {
        Mode::Classic
    };
    let alice = match args.alice {
        AliceArg::Engine => AliceKind::Engine,
        AliceArg::Naive => AliceKind::Naive,
    };
    let transcript = match args.bob {
        BobArg::Human => {
            let state = GameState::new(palette.clone(), mode)?;
            let mut engine = alice_for(alice, &state);
            let stdin = io::stdin();
            let end = human::play(state, engine.as_mut(), &mut stdin.lock(), &mut io::stderr())?;
            let transcript = Transcript::from_state(&end).expect("finished game");
            transcript.replay(&palette)?;
            transcript
        }
        bob => {
            let bob = match bob {
                BobArg::Random => BobKind::Random,
                BobArg::FirstFit => BobKind::FirstFit,
                BobArg::Adversarial => BobKind::Adversarial,
                BobArg::Human => unreachable!(),
            };
            run_game(&GameConfig {
                palette,
                mode,
                alice,
                bob,
                seed: args.seed,
            })?
        }
    };
    let json = transcript.to_json();
    if let Some(path) = &args.transcript {
        std::fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut out = io::stdout().lock();
    writeln!(out, "{json}")?;
    out.flush()?;
    Ok(match transcript.winner {
        Role::Alice => EXIT_OK,
        Role::Bob => EXIT_BOB_WINS,
    })
}

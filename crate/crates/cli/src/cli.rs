//! Subcommands. Grids come from a file argument or stdin; results go to
//! stdout. Exit status is 0 on success, 2 for a negative answer (unsolvable,
//! refuted, unsupported, verification failed) and 1 on any error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use linepush::compaction::{brute_force_search, counterexample, diagonal_config, solve_box, BoxOutcome, BoxSpec, SearchOutcome};
use linepush::oracles::group_report;
use linepush::{canonicalize, compact::shape_of, Configuration, PushSequence};

use crate::solve::{self, Outcome, SolveError};

pub const OK: u8 = 0;
pub const ERROR: u8 = 1;
pub const NEGATIVE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "linepush", version, about = "Line-push block puzzles: simulate, classify, solve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Grid file; `-` or nothing reads stdin.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply pushes and print the final grid.
    Sim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        moves: String,
        /// Print every intermediate grid, separated by `---`.
        #[arg(long)]
        trace: bool,
    },
    /// Print the down/left canonical form and the pushes that reach it.
    Canon {
        #[command(flatten)]
        input: Input,
    },
    /// Shape and group data of a compact configuration, as JSON.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Push a sparse configuration into an `a` by `b` box.
    SolveBox {
        #[command(flatten)]
        input: Input,
        /// Columns.
        #[arg(long)]
        a: usize,
        /// Rows.
        #[arg(long)]
        b: usize,
        /// Breadth-first search instead of the constructive procedures.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = 10_000_000)]
        max_states: usize,
    },
    /// Pushes taking the input to a relabeling of it.
    SolvePerm {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        goal: PathBuf,
    },
    /// Check that pushes take the input to a goal. Without `--moves` the
    /// pushes are read from stdin and the start grid must be a file.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        moves: Option<String>,
        #[arg(long, conflicts_with = "box_size", required_unless_present = "box_size")]
        goal: Option<PathBuf>,
        /// Any full box of this size, written `AxB` (columns by rows).
        #[arg(long = "box", value_name = "AxB", value_parser = parse_box)]
        box_size: Option<BoxSpec>,
    },
    /// Generate a starting configuration.
    Gen {
        #[command(subcommand)]
        what: Generate,
    },
    /// Enumerate the reachable permutation group of a compact shape.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Number of sample words in the report.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Serve the JSON API over a puzzle directory.
    Serve {
        #[arg(long, env = "PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "PUZZLE_DIR", default_value = "puzzles")]
        puzzles: PathBuf,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        /// Per-request budget for /api/solve, in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        timeout_ms: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// `n` tokens on a diagonal.
    Diagonal {
        #[arg(long)]
        n: usize,
    },
    /// A sparse configuration that cannot be pushed into an `a` by `b` box.
    Counterexample {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

fn parse_box(s: &str) -> Result<BoxSpec, String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or("expected AxB, e.g. 3x3")?;
    let a = a.trim().parse().map_err(|_| format!("bad column count {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad row count {b:?}"))?;
    if a == 0 || b == 0 {
        return Err("box sides must be positive".into());
    }
    Ok(BoxSpec { a, b })
}

/// What a subcommand produced: text for stdout, an optional note for stderr
/// and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: impl Into<String>) -> Self {
        Self {
            code: OK,
            stdout: stdout.into(),
            stderr: String::new(),
        }
    }

    fn negative(stdout: impl Into<String>, note: impl Into<String>) -> Self {
        Self {
            code: NEGATIVE,
            stdout: stdout.into(),
            stderr: note.into(),
        }
    }

    pub fn error(message: impl Into<String>) -> Self {
        Self {
            code: ERROR,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

fn read_text(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn parse_grid(text: &str, what: &str) -> Result<Configuration, String> {
    text.trim_end_matches(['\n', '\r'])
        .parse()
        .map_err(|e| format!("malformed grid in {what}: {e}"))
}

fn read_grid(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Configuration, String> {
    let what = path.map_or("stdin".to_string(), |p| p.display().to_string());
    parse_grid(&read_text(path, stdin)?, &what)
}

fn parse_moves(text: &str) -> Result<PushSequence, String> {
    text.parse().map_err(|e| format!("malformed moves: {e}"))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

/// Runs every subcommand except `serve`, which needs a runtime.
pub fn run(command: &Command, stdin: &mut dyn Read) -> Report {
    match execute(command, stdin) {
        Ok(r) => r,
        Err(message) => Report::error(message),
    }
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<Report, String> {
    Ok(match command {
        Command::Sim { input, moves, trace } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            let s = parse_moves(moves)?;
            let grids = c.apply_traced(&s);
            let shown: Vec<String> = if *trace {
                grids.iter().map(|g| g.format_grid()).collect()
            } else {
                vec![grids.last().unwrap().format_grid()]
            };
            Report::ok(shown.join("\n---\n") + "\n")
        }
        Command::Canon { input } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            let (k, s) = canonicalize(&c);
            Report::ok(format!("# moves: {s}\n{k}\n"))
        }
        Command::Classify { input } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            Report::ok(to_json(&solve::classify(&c).map_err(|e| e.to_string())?))
        }
        Command::SolveBox {
            input,
            a,
            b,
            brute,
            max_states,
        } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            let spec = BoxSpec { a: *a, b: *b };
            if c.len() != spec.tokens() {
                return Err(format!("a {a}x{b} box needs {} tokens, the grid has {}", spec.tokens(), c.len()));
            }
            if *brute {
                match brute_force_search(&c, |x| spec.matches(x), solve::budget(*max_states, None), false) {
                    SearchOutcome::Found(s) => Report::ok(format!("{s}\n")),
                    SearchOutcome::Refuted { states } => {
                        Report::negative("REFUTED\n", format!("{states} reachable configurations, none is a {a}x{b} box\n"))
                    }
                    SearchOutcome::Exhausted { states, .. } => {
                        return Err(format!("budget exceeded after {states} states"));
                    }
                }
            } else {
                match solve_box(&c, spec).map_err(|e| e.to_string())? {
                    BoxOutcome::Found(s) => Report::ok(format!("{s}\n")),
                    BoxOutcome::Unsupported => {
                        Report::negative("UNSUPPORTED\n", format!("no constructive procedure for {a}x{b}; try --brute\n"))
                    }
                    BoxOutcome::NoneFound => return Err("internal: constructed sequence failed verification".into()),
                }
            }
        }
        Command::SolvePerm { input, goal } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            let g = read_grid(Some(goal), stdin)?;
            match solve::solve(&c, &g, solve::budget(10_000_000, None)) {
                Ok(Outcome::Solved(s)) => Report::ok(format!("{s}\n")),
                Ok(Outcome::Unsolvable(reason)) => Report::negative(format!("UNSOLVABLE({reason})\n"), ""),
                Err(e @ SolveError::Invalid(_)) => Report::negative("UNSOLVABLE(invalid)\n", format!("{e}\n")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Verify {
            input,
            moves,
            goal,
            box_size,
        } => {
            let (start, s) = match moves {
                Some(m) => (read_grid(input.input.as_ref(), stdin)?, parse_moves(m)?),
                None => {
                    let path = input
                        .input
                        .as_ref()
                        .filter(|p| p.as_os_str() != "-")
                        .ok_or("without --moves the start grid must be given as a file")?;
                    let start = read_grid(Some(path), stdin)?;
                    (start, parse_moves(&read_text(None, stdin)?)?)
                }
            };
            let goal = match (goal, box_size) {
                (Some(p), _) => read_grid(Some(p), stdin)?,
                (None, Some(spec)) => Configuration::unlabeled(
                    (0..spec.b as i64).flat_map(|y| (0..spec.a as i64).map(move |x| (x, y))),
                    '#',
                )
                .map_err(|e| e.to_string())?,
                (None, None) => unreachable!("clap requires one of --goal and --box"),
            };
            if solve::verify(&start, &s, &goal) {
                Report::ok("OK\n")
            } else {
                Report::negative("FAIL\n", format!("reached\n{}\n", start.apply(&s)))
            }
        }
        Command::Gen { what } => {
            let c = match what {
                Generate::Diagonal { n } => diagonal_config(*n),
                Generate::Counterexample { a, b } => counterexample(*a, *b),
            }
            .map_err(|e| e.to_string())?;
            Report::ok(format!("{c}\n"))
        }
        Command::Enumerate { input, budget, samples } => {
            let c = read_grid(input.input.as_ref(), stdin)?;
            let k = shape_of(&c).map_err(|e| e.to_string())?.labeled();
            let report = group_report(&k, *budget, *samples).map_err(|e| e.to_string())?;
            if !report.complete {
                return Err(format!("budget exceeded after {} states", report.states));
            }
            Report::ok(to_json(&report))
        }
        Command::Serve { .. } => return Err("serve is handled by the binary".into()),
    })
}

/// Prints a report and returns its exit status.
pub fn emit(report: &Report) -> u8 {
    let _ = std::io::stdout().write_all(report.stdout.as_bytes());
    let _ = std::io::stderr().write_all(report.stderr.as_bytes());
    report.code
}

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gogkit::cli::{
    self, exit, group_def, InputDocument, ReportDocument, Suite, TaskDef, INPUT_SCHEMA,
};
use gogkit::notation::{parse_presentation, NotationError};
use gogkit::{Limits, Mode};

/// Exact Euler-type invariants, finite covers and commensurability checks
/// for free products of groups.
#[derive(Parser)]
#[command(name = "gogkit", version)]
struct Cli {
    #[command(flatten)]
    config: Config,

    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,

    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Largest finite group order built from generators.
    #[arg(long, global = true, env = "GOGKIT_ORDER_BOUND", default_value_t = Limits::default().max_order)]
    order_bound: usize,

    /// Largest cover index enumerated.
    #[arg(long, global = true, env = "GOGKIT_K_BOUND", default_value_t = Limits::default().max_degree)]
    k_bound: usize,

    /// Worker threads for enumeration; 0 picks the number of cores.
    #[arg(long, global = true, env = "GOGKIT_WORKERS", default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Theorem,
    Weakened,
    RatioExtended,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Theorem => Mode::Theorem,
            ModeArg::Weakened => Mode::Weakened,
            ModeArg::RatioExtended => Mode::RatioExtended,
        }
    }
}

/// Groups are written as free products, e.g. `C2*C3*F1`, `S3*D4` or
/// `[S2:-2]*[S2:-2]` for abstract one-ended factors with a given ρ.
#[derive(Subcommand)]
enum Command {
    /// Run every task of a JSON input document.
    Run { file: PathBuf },
    /// Check every identity on the built-in bases.
    Selftest {
        /// Go up to index 6 instead of 5.
        #[arg(long)]
        extended: bool,
    },
    /// Evaluate χ_ρ.
    Chi { group: String },
    /// List the covers of one index with their orbit and stabilizer tables.
    Covers {
        group: String,
        #[arg(long)]
        k: usize,
    },
    /// Check every identity on all covers up to an index.
    Verify {
        group: String,
        #[arg(long)]
        k_max: usize,
    },
    /// Decide whether index arithmetic rules out commensurability.
    Obstruct {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value = "theorem")]
        mode: ModeArg,
    },
    /// Search for isomorphic finite-index subgroups.
    Witness {
        g: String,
        h: String,
        #[arg(long)]
        k_max: usize,
    },
    /// Check a cover given only by the indices of its pieces, e.g.
    /// `--claimed 1,2/3` for two factors.
    Symbolic {
        group: String,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        claimed: String,
    },
}

/// A failure before any report exists, with its exit status.
struct Failure {
    message: String,
    code: i32,
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure {
            message,
            code: exit::INPUT_ERROR,
        }
    }
}

fn parse_claimed(text: &str) -> Result<Vec<Vec<u64>>, String> {
    text.split('/')
        .map(|row| {
            row.split(',')
                .map(|d| {
                    d.trim()
                        .parse::<u64>()
                        .map_err(|_| format!("bad index {d:?} in --claimed"))
                })
                .collect()
        })
        .collect()
}

/// Turns a one-shot subcommand into a single-task document.
fn document(
    groups: &[(&str, &str)],
    task: TaskDef,
    limits: &Limits,
) -> Result<InputDocument, Failure> {
    let mut defs = BTreeMap::new();
    for (name, text) in groups {
        let p = parse_presentation(text, limits.max_order).map_err(|e| Failure {
            code: match e {
                NotationError::TooLarge(..) => exit::BOUND_EXCEEDED,
                _ => exit::INPUT_ERROR,
            },
            message: format!("{text}: {e}"),
        })?;
        defs.insert(name.to_string(), group_def(&p));
    }
    Ok(InputDocument {
        schema: INPUT_SCHEMA.to_owned(),
        groups: defs,
        tasks: vec![task],
    })
}

fn report(command: Command, limits: &Limits) -> Result<ReportDocument, Failure> {
    let single = |name: &str, task: TaskDef, text: &str| document(&[(name, text)], task, limits);
    let doc = match command {
        Command::Run { file } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            return Ok(cli::run_text(&text, limits));
        }
        Command::Selftest { extended } => {
            let suite = if extended {
                Suite::Extended
            } else {
                Suite::Standard
            };
            return Ok(cli::selftest(suite, limits));
        }
        Command::Chi { group } => single("G", TaskDef::Chi { group: "G".into() }, &group)?,
        Command::Covers { group, k } => single(
            "G",
            TaskDef::Covers {
                group: "G".into(),
                k,
            },
            &group,
        )?,
        Command::Verify { group, k_max } => single(
            "G",
            TaskDef::Verify {
                group: "G".into(),
                k_max,
            },
            &group,
        )?,
        Command::Symbolic { group, k, claimed } => {
            let claimed = parse_claimed(&claimed)?;
            single(
                "G",
                TaskDef::Symbolic {
                    group: "G".into(),
                    k,
                    claimed,
                },
                &group,
            )?
        }
        Command::Obstruct { g, h, mode } => document(
            &[("G", &g), ("H", &h)],
            TaskDef::Obstruct {
                g: "G".into(),
                h: "H".into(),
                mode: mode.into(),
            },
            limits,
        )?,
        Command::Witness { g, h, k_max } => document(
            &[("G", &g), ("H", &h)],
            TaskDef::Witness {
                g: "G".into(),
                h: "H".into(),
                k_max,
            },
            limits,
        )?,
    };
    Ok(cli::run(&doc, limits))
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let limits = Limits {
        max_order: args.config.order_bound,
        max_degree: args.config.k_bound,
        workers: args.config.workers,
    };
    match report(args.command, &limits) {
        Ok(r) => {
            if args.pretty {
                print!("{}", cli::render_pretty(&r));
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).expect("reports serialize")
                );
            }
            ExitCode::from(cli::exit_code(&r) as u8)
        }
        Err(f) => {
            eprintln!("gogkit: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}

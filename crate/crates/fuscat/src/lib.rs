//! The `fuscat` command line: file formats, reports and the subcommands
//! over `fuscat-core`. [`run`] is the whole program minus process exit, so
//! tests can drive it in-process.

pub mod commands;
pub mod dot;
pub mod error;
pub mod formats;
pub mod presets;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fuscat_core::Limits;

use crate::commands::{AmalgamParams, Mode, Outcome};
use crate::error::{input, CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "fuscat",
    version,
    about = "Fusion systems, trees of fusion systems and amalgams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write the DOT rendering to this file.
    #[arg(long, value_name = "FILE")]
    graph_out: Option<PathBuf>,
    /// Worker threads; changes wall time only.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Refuse groups with more elements than this.
    #[arg(long)]
    max_order: Option<usize>,
    /// Refuse fusion systems with more morphisms than this.
    #[arg(long)]
    max_morphisms: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, exponent, centre and Sylow subgroups of a group.
    GroupInfo {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Builds F_S(G) or the system generated by seed morphisms.
    Fusion {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Decides saturation, with a witness on failure.
    Saturation {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Induces the tree of fusion systems, checks (H) and builds the completion.
    TreeCompletion {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// The P-orbit graph of representations of a subgroup P.
    OrbitGraph {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        /// Preset name (S, Z, C4, V1, V2), JSON permutation array, or
        /// cycle strings separated by ';'.
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum, default_value = "restricted")]
        mode: Mode,
        #[command(flatten)]
        common: Common,
    },
    /// Checks the centric and orbit-tree hypotheses against saturation.
    TheoremB {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Extends F0 by automorphisms of strongly p-embedded targets.
    TheoremC {
        #[arg(long)]
        spec: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Normal forms in an amalgamated product A *_C B.
    AmalgamCheck {
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
        tree: Option<PathBuf>,
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Longest alternating word checked exhaustively.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Longest element used in the conjugation chains.
        #[arg(long, default_value_t = 3)]
        chain_len: usize,
        /// Random pairs for the multiplicativity check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::GroupInfo { common, .. }
            | Command::Fusion { common, .. }
            | Command::Saturation { common, .. }
            | Command::TreeCompletion { common, .. }
            | Command::OrbitGraph { common, .. }
            | Command::TheoremB { common, .. }
            | Command::TheoremC { common, .. }
            | Command::AmalgamCheck { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::GroupInfo { .. } => "group-info",
            Command::Fusion { .. } => "fusion",
            Command::Saturation { .. } => "saturation",
            Command::TreeCompletion { .. } => "tree-completion",
            Command::OrbitGraph { .. } => "orbit-graph",
            Command::TheoremB { .. } => "theorem-b",
            Command::TheoremC { .. } => "theorem-c",
            Command::AmalgamCheck { .. } => "amalgam-check",
        }
    }

    fn execute(&self, limits: &Limits) -> CliResult<Outcome> {
        match self {
            Command::GroupInfo { group, p, .. } => commands::group_info(group, *p, limits),
            Command::Fusion { group, p, .. } => commands::fusion(group, *p, limits),
            Command::Saturation { group, p, .. } => commands::saturation(group, *p, limits),
            Command::TreeCompletion { tree, p, .. } => commands::tree_completion(tree, *p, limits),
            Command::OrbitGraph {
                tree,
                p,
                subgroup,
                mode,
                ..
            } => commands::orbit_graph(tree, *p, subgroup, *mode, limits),
            Command::TheoremB { tree, p, .. } => commands::theorem_b(tree, *p, limits),
            Command::TheoremC { spec, .. } => commands::theorem_c(spec, limits),
            Command::AmalgamCheck {
                tree,
                spec,
                max_len,
                chain_len,
                samples,
                seed,
                ..
            } => {
                let path = tree.as_ref().or(spec.as_ref()).expect("clap requires one");
                let params = AmalgamParams {
                    max_len: *max_len,
                    chain_len: *chain_len,
                    samples: *samples,
                    seed: *seed,
                    sample_word_len: 6,
                };
                commands::amalgam_check(path, &params, limits)
            }
        }
    }
}

/// What the process should print and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct FailureReport<'a> {
    command: &'a str,
    verdict: bool,
    failure: String,
}

/// Runs `fuscat` on `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: msg,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: msg,
                }
            };
        }
    };
    let cmd = &cli.command;
    let common = cmd.common();
    let mut limits = Limits::default();
    if let Some(n) = common.max_order {
        limits.max_order = n;
    }
    if let Some(n) = common.max_morphisms {
        limits.max_morphisms = n;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs as usize)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return failure(2, format!("cannot start {} worker threads: {e}", common.jobs)),
    };
    match pool
        .install(|| cmd.execute(&limits))
        .and_then(|o| render(cmd.name(), common, o))
    {
        Ok(out) => out,
        Err(e) => {
            let code = e.exit_code();
            let mut out = failure(code, e.to_string());
            if code == 1 {
                let r = FailureReport {
                    command: cmd.name(),
                    verdict: false,
                    failure: e.to_string(),
                };
                out.stdout = match common.format {
                    Format::Text => format!("{}: {}\n", r.command, r.failure),
                    _ => report::to_json(&r),
                };
            }
            out
        }
    }
}

fn failure(code: i32, msg: String) -> Output {
    Output {
        code,
        stdout: String::new(),
        stderr: format!("fuscat: {msg}\n"),
    }
}

fn render(name: &str, common: &Common, o: Outcome) -> CliResult<Output> {
    if common.format == Format::Dot && o.dot.is_none() {
        return Err(input(format!("{name} has no DOT output")));
    }
    if let Some(path) = &common.graph_out {
        let dot = o
            .dot
            .as_ref()
            .ok_or_else(|| input(format!("{name} has no graph to write")))?;
        std::fs::write(path, dot).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    let stdout = match common.format {
        Format::Json => o.json,
        Format::Text => o.text,
        Format::Dot => o.dot.expect("checked above"),
    };
    Ok(Output {
        code: o.exit,
        stdout,
        stderr: String::new(),
    })
}

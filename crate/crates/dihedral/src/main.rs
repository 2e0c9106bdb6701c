use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};

use dihedral::input::{parse_group, Source};
use dihedral::report::{render_branched, render_decide, render_link};
use dihedral::{batch, commands, fixtures, EXIT_ERROR, EXIT_NO};
use dihedral_core::DEFAULT_CAP;

/// Decide whether a finitely presented group surjects onto Z/2 * Z/2, build
/// the surjection, and analyse link exteriors given as PD codes.
///
/// Exit status: 0 = YES, 3 = NO, 1 = error, 2 = usage.
#[derive(Parser, Debug)]
#[command(name = "dihedral", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest H^1(G; Z/2) dimension (or link component count) to enumerate.
    #[arg(long, global = true, env = "DIHEDRAL_CAP", default_value_t = DEFAULT_CAP, value_parser = positive)]
    cap: usize,

    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the group surjects onto Z/2 * Z/2.
    Decide(GroupArgs),
    /// Like `decide`, with the full witness: subgroup, involution, torsion.
    Construct(GroupArgs),
    /// Link diagrams given as PD codes.
    #[command(subcommand)]
    Link(LinkCommand),
    /// Process JSON lines `{"id", "type": "presentation"|"pd", "payload"}`.
    Batch {
        /// Read lines from this file instead of stdin.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Run the bundled fixture corpus.
        #[arg(long, conflicts_with = "file")]
        corpus: bool,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Presentation such as "<x, y | x y x = y x y>" or its JSON form.
    input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
    /// Restrict to one class, given by its values on the generators: "1,0".
    #[arg(long)]
    class: Option<String>,
}

#[derive(Subcommand, Debug)]
enum LinkCommand {
    /// Linking numbers, per-class covers, branched cover and the verdict.
    Analyze(LinkArgs),
    /// First homology of the double cover branched over the link.
    BranchedCover(LinkArgs),
}

#[derive(Args, Debug)]
struct LinkArgs {
    /// PD code such as "X(1,3,2,4) X(3,1,4,2)".
    input: Option<String>,
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
    /// A bundled diagram: unknot, trefoil, hopf, whitehead, ...
    #[arg(long, conflicts_with_all = ["input", "file"])]
    fixture: Option<String>,
    /// Restrict to the meridian class of these components: "2" or "1,3".
    #[arg(long)]
    class: Option<String>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl LinkArgs {
    fn text(&self) -> Result<String> {
        if let Some(name) = &self.fixture {
            let pd = fixtures::link(name).ok_or_else(|| {
                let known: Vec<&str> = fixtures::link_names().collect();
                anyhow!("no fixture {name:?}; known: {}", known.join(", "))
            })?;
            return Ok(pd.to_string());
        }
        Source::select(self.input.clone(), self.file.clone())?.read()
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn verdict_code(yes: bool) -> i32 {
    if yes {
        0
    } else {
        EXIT_NO
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Decide(ref args) => group_command(args, &cli, false),
        Command::Construct(ref args) => group_command(args, &cli, true),
        Command::Link(LinkCommand::Analyze(ref args)) => {
            let report = commands::link(&args.text()?, cli.cap, args.class.as_deref())?;
            if cli.json {
                emit_json(&report)?;
            } else {
                emit(&render_link(&report))?;
            }
            let yes = match &report.selected {
                Some(sel) => sel.verdict == "YES",
                None => report.is_yes(),
            };
            Ok(verdict_code(yes))
        }
        Command::Link(LinkCommand::BranchedCover(ref args)) => {
            let report = commands::branched_cover(&args.text()?)?;
            if cli.json {
                emit_json(&report)?;
            } else {
                emit(&render_branched(&report))?;
            }
            Ok(0)
        }
        Command::Batch { ref file, corpus } => {
            let input = if corpus {
                fixtures::corpus_jsonl()
            } else {
                Source::select(None, file.clone())?.read()?
            };
            let (out, _) = batch::run(&input, cli.cap, cli.jobs)?;
            emit(&out)?;
            Ok(0)
        }
    }
}

fn group_command(args: &GroupArgs, cli: &Cli, full: bool) -> Result<i32> {
    let text = Source::select(args.input.clone(), args.file.clone())?.read()?;
    let p = parse_group(&text)?;
    let report = commands::decide(&p, cli.cap, cli.jobs, args.class.as_deref())?;
    if cli.json {
        emit_json(&report)?;
    } else {
        emit(&render_decide(&report, full))?;
    }
    Ok(verdict_code(report.is_yes()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

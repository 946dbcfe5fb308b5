use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use twistforge::catalog::{all_entries, dump_all, entry, EntryId, Plan};
use twistforge::twist::{build_entry_twist, twisted_coproduct};
use twistforge::{Error, GaussianRational, Scalar, UEAElement};
use twistforge_cli::checks::probe_tilde9;
use twistforge_cli::{exit_code, run_checks, CheckKind, Report, Settings};

#[derive(Parser)]
#[command(name = "twistforge", version, about = "Classical r-matrices and their twists")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries.
    List,
    /// Print every entry (r-matrix, pieces, claims, twist plan).
    Dump {
        id: Option<String>,
    },
    /// Run one kind of check on one entry or on the whole catalog.
    Check {
        #[arg(value_enum)]
        kind: Kind,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Build a twist and print its factors and series.
    BuildTwist {
        id: String,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Twisted coproduct of a generator.
    Coproduct {
        id: String,
        generator: String,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Report-only probes.
    Probe {
        #[command(subcommand)]
        probe: Probe,
    },
    /// Every check on the whole catalog.
    Report {
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum Probe {
    /// The unmodified ninth row at a fixed χ.
    Tilde9 {
        #[arg(long)]
        chi: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cybe,
    Zakrzewski,
    Subordination,
    Jordanian,
    Cocycle,
    LocalSymmetry,
}

impl From<Kind> for CheckKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Cybe => CheckKind::Cybe,
            Kind::Zakrzewski => CheckKind::Zakrzewski,
            Kind::Subordination => CheckKind::Subordination,
            Kind::Jordanian => CheckKind::Jordanian,
            Kind::Cocycle => CheckKind::Cocycle,
            Kind::LocalSymmetry => CheckKind::LocalSymmetry,
        }
    }
}

#[derive(Args)]
struct Target {
    /// Entry id such as L1, P17, 17, tilde9.
    id: Option<String>,
    /// Check every catalog entry.
    #[arg(long, conflicts_with = "id")]
    all: bool,
}

#[derive(Args)]
struct SeriesArgs {
    /// Truncation order (default: $TWISTFORGE_ORDER, else 3).
    #[arg(long)]
    order: Option<usize>,
    /// Override a specialization constant, e.g. alpha=2/3.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print per-check wall-clock times to stderr.
    #[arg(long)]
    timings: bool,
}

/// Either a library error (mapped to its exit code) or an I/O problem.
enum Failure {
    Lib(Error),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn settings(s: &SeriesArgs) -> Result<Settings, Error> {
    Settings::with_params(Settings::resolve_order(s.order)?, &s.params)
}

fn targets(t: &Target) -> Result<Vec<EntryId>, Error> {
    match (&t.id, t.all) {
        (_, true) => Ok(EntryId::all()),
        (Some(id), false) => Ok(vec![EntryId::from_str(id)?]),
        (None, false) => Err(Error::Parse("give an entry id or --all".into())),
    }
}

fn emit(report: &Report, out: &Output) -> anyhow::Result<()> {
    let body = match out.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &out.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    if out.timings {
        eprint!("{}", report.timings());
    }
    Ok(())
}

fn verdict_code(report: &Report) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list() -> ExitCode {
    println!("{:<9} {:<10} {:<12} {:<7} twist", "id", "algebra", "expected", "pieces");
    for e in all_entries() {
        let twist = match &e.plan {
            Plan::Twist(f) => format!("{} factor(s)", f.len()),
            Plan::Delegated(id) => format!("as {id}"),
            Plan::None(why) => format!("none ({why})"),
        };
        println!(
            "{:<9} {:<10} {:<12} {:<7} {twist}",
            e.id.to_string(),
            e.algebra.name(),
            e.expected.to_string(),
            e.pieces.len()
        );
    }
    ExitCode::SUCCESS
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::List => Ok(list()),
        Command::Dump { id } => {
            match id {
                Some(id) => print!("{}", entry(EntryId::from_str(&id)?)?.dump()),
                None => print!("{}", dump_all()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { kind, target, series, output } => {
            let s = settings(&series)?;
            let report = run_checks(&[kind.into()], &targets(&target)?, &s)?;
            emit(&report, &output)?;
            Ok(verdict_code(&report))
        }
        Command::Report { all, series, output } => {
            if !all {
                return Err(Error::Parse("report needs --all".into()).into());
            }
            let s = settings(&series)?;
            let report = run_checks(&CheckKind::ALL, &EntryId::all(), &s)?;
            emit(&report, &output)?;
            Ok(verdict_code(&report))
        }
        Command::BuildTwist { id, series } => {
            let s = settings(&series)?;
            let e = entry(EntryId::from_str(&id)?)?;
            let f = build_entry_twist(&e, &s.map, s.order)?;
            for x in &f.factors {
                println!("{} [{}]: exponent {}", x.label, x.kind, x.argument);
            }
            println!("{f}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Coproduct { id, generator, series } => {
            let s = settings(&series)?;
            let e = entry(EntryId::from_str(&id)?)?;
            let j = e.algebra.index_of(&generator)?;
            let f = build_entry_twist(&e, &s.map, s.order)?;
            let x = UEAElement::<GaussianRational>::generator(&e.algebra, j);
            println!("Delta_F({generator}) =\n{}", twisted_coproduct(&f, &x)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe { probe: Probe::Tilde9 { chi, output } } => {
            let chi = Scalar::constant(GaussianRational::from_str(&chi)?);
            let report = probe_tilde9(&chi)?;
            emit(&report, &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! The `rwords` command line.
//!
//! Sizes are given either as the index `--n` (terms `1..=n`) or as the word
//! length `--len`, with `n = len + 1`. Exit codes: 0 success, 1 a
//! disagreement or counterexample was found, 2 bad usage or parameters,
//! 3 I/O failure.

pub mod compute;
pub mod export;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rwords_core::identities::{check_all, check_identity};
use rwords_core::verify::{verify_case, Formulas, VerifyConfig};
use rwords_core::words::{count_automaton, ExhaustiveCounter, DEFAULT_BUDGET};
use rwords_core::CaseSpec;

use compute::{render_sequence, render_triangle, SeqSource, TriangleSource};
use export::{Format, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rwords_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "rwords", version, about = "Exact counts of restricted words")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CaseArgs {
    /// Word family, 1 to 5
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=5))]
    case_id: u8,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Extension level: number of letters added to the base alphabet
    #[arg(long)]
    m: u32,
}

impl CaseArgs {
    fn spec(&self) -> Result<CaseSpec, CliError> {
        Ok(CaseSpec::new(self.case_id, self.a, self.b)?)
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Size {
    /// Largest index n
    #[arg(long)]
    n: Option<usize>,
    /// Largest word length, n - 1
    #[arg(long)]
    len: Option<usize>,
}

impl Size {
    fn n(&self) -> usize {
        self.n.unwrap_or_else(|| self.len.unwrap_or(0) + 1)
    }

    fn word_len(&self) -> Result<usize, CliError> {
        match (self.n, self.len) {
            (Some(0), _) => Err(CliError::Usage("--n must be at least 1".into())),
            (Some(n), _) => Ok(n - 1),
            (None, len) => Ok(len.unwrap_or(0)),
        }
    }
}

#[derive(Debug, Args)]
struct Enumeration {
    /// Most words a single exhaustive enumeration may visit
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads for exhaustive enumeration
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallelism: u64,
}

impl Enumeration {
    fn counter(&self) -> ExhaustiveCounter {
        ExhaustiveCounter::new(self.budget, self.parallelism as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WordsAction {
    List,
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Counting {
    Exhaustive,
    Automaton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Seq,
    Triangle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print f_m(1..=n) on one line
    Seq {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = SeqSource::Recurrence)]
        source: SeqSource,
    },
    /// Print the triangle c_m(n,k), one row per line
    Triangle {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = TriangleSource::Convolution)]
        source: TriangleSource,
    },
    /// Compare every available source up to a word length
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[command(flatten)]
        enumeration: Enumeration,
    },
    /// Check named identities for n up to --max-n
    Identity {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
    },
    /// List or count the valid words of one length
    Words {
        #[arg(value_enum)]
        action: WordsAction,
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        size: Size,
        /// Only words with exactly this many marked letters
        #[arg(long)]
        marks: Option<usize>,
        /// Counting method for `count`
        #[arg(long, value_enum, default_value_t = Counting::Exhaustive)]
        source: Counting,
        #[command(flatten)]
        enumeration: Enumeration,
    },
    /// Write a sequence or triangle to a file (`-` for stdout)
    Export {
        #[arg(long, value_enum, default_value_t = TableKind::Seq)]
        table: TableKind,
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        size: Size,
        /// A `seq` or `triangle` source; defaults to recurrence / convolution
        #[arg(long)]
        source: Option<String>,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Runs the command line against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(
        args,
        Formulas::default(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// [`run`] with the explicit formulas and output streams supplied.
pub fn run_with<I, T>(args: I, formulas: Formulas, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(cli.command, formulas, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, formulas: Formulas, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Seq { case, size, source } => {
            let values = compute::sequence(case.spec()?, case.m, size.n(), source)?;
            writeln!(out, "{}", render_sequence(&values))?;
            Ok(0)
        }
        Command::Triangle { case, size, source } => {
            let t = compute::triangle(case.spec()?, case.m, size.n(), source)?;
            writeln!(out, "{}", render_triangle(&t))?;
            Ok(0)
        }
        Command::Verify {
            case,
            max_len,
            enumeration,
        } => {
            let config = VerifyConfig {
                counter: enumeration.counter(),
                formulas,
                ..VerifyConfig::new(case.spec()?, case.m, max_len)
            };
            let report = verify_case(&config)?;
            writeln!(out, "{report}")?;
            match report.first_disagreement() {
                None => Ok(0),
                Some(c) => {
                    writeln!(out, "first counterexample: {c}")?;
                    Ok(1)
                }
            }
        }
        Command::Identity { name, all, max_n } => {
            let reports = match name {
                Some(name) if !all => vec![check_identity(&name, 1..=max_n)?],
                _ => check_all(max_n)?,
            };
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            Ok(if reports.iter().all(|r| r.verified()) {
                0
            } else {
                1
            })
        }
        Command::Words {
            action,
            case,
            size,
            marks,
            source,
            enumeration,
        } => {
            let spec = case.spec()?;
            let len = size.word_len()?;
            if marks.is_some() && spec.marked_letter(case.m).is_none() {
                return Err(CliError::Usage("--marks needs m >= 1".into()));
            }
            let counter = enumeration.counter();
            match action {
                WordsAction::List => {
                    let marked = spec.marked_letter(case.m);
                    for w in counter.list(spec, case.m, len)? {
                        let keep = match (marks, marked) {
                            (Some(k), Some(c)) => {
                                w.letters().iter().filter(|&&x| x == c).count() == k
                            }
                            _ => true,
                        };
                        if keep {
                            writeln!(out, "{w}")?;
                        }
                    }
                }
                WordsAction::Count => {
                    let count = match (source, marks) {
                        (Counting::Automaton, marks) => count_automaton(spec, case.m, len, marks),
                        (Counting::Exhaustive, None) => counter.count(spec, case.m, len)?,
                        (Counting::Exhaustive, Some(k)) => {
                            counter.count_marked(spec, case.m, len, k)?
                        }
                    };
                    writeln!(out, "{count}")?;
                }
            }
            Ok(0)
        }
        Command::Export {
            table,
            case,
            size,
            source,
            format,
            out: path,
        } => {
            let spec = case.spec()?;
            let (source_name, data) = match table {
                TableKind::Seq => {
                    let src = parse_source(source.as_deref(), SeqSource::Recurrence)?;
                    let values = compute::sequence(spec, case.m, size.n(), src)?;
                    (src.to_string(), Table::Sequence(values))
                }
                TableKind::Triangle => {
                    let src = parse_source(source.as_deref(), TriangleSource::Convolution)?;
                    let t = compute::triangle(spec, case.m, size.n(), src)?;
                    (src.to_string(), Table::Triangle(t))
                }
            };
            if path.as_os_str() == "-" {
                export::write(out, format, spec, case.m, &source_name, &data)?;
            } else {
                let file = File::create(&path)
                    .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
                let mut file = BufWriter::new(file);
                export::write(&mut file, format, spec, case.m, &source_name, &data)?;
                file.flush()?;
            }
            Ok(0)
        }
    }
}

fn parse_source<S: ValueEnum>(given: Option<&str>, default: S) -> Result<S, CliError> {
    let Some(name) = given else {
        return Ok(default);
    };
    S::from_str(name, false).map_err(|_| {
        let names: Vec<String> = S::value_variants()
            .iter()
            .filter_map(|v| v.to_possible_value())
            .map(|v| v.get_name().to_string())
            .collect();
        CliError::Usage(format!(
            "unknown source `{name}`; available sources: {}",
            names.join(", ")
        ))
    })
}

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use euclidean_rhythms::classify::{AksakClass, StringClass};
use euclidean_rhythms::corpus::{
    load_corpus, load_corpus_from_path, Corpus, CorpusError, CorpusFilter, EntryKind,
};
use euclidean_rhythms::generators::generated;
use euclidean_rhythms::report::AnalysisReport;
use euclidean_rhythms::svg::render_svg;
use euclidean_rhythms::verify::Theorem;
use euclidean_rhythms::{EvenAlgorithm, Rhythm};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "rhythm",
    version,
    about = "Generate and analyze Euclidean rhythms"
)]
struct Cli {
    /// Read the corpus from this file instead of the bundled copy.
    #[arg(long, global = true, value_name = "PATH")]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate k onsets in n pulses.
    Gen {
        k: usize,
        n: usize,
        /// bjorklund, euclid, clough, snap or generated:M
        #[arg(long, default_value = "bjorklund")]
        algo: String,
        /// Rotate clockwise by this many pulses.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        rotate: i64,
    },
    /// Analyze patterns given as arguments, or one per line on stdin.
    Analyze { patterns: Vec<String> },
    /// Run an exhaustive theorem check.
    Verify {
        /// even-equivalence, even-uniqueness, deep-characterization,
        /// winograd-erdos, erd-deep-gcd, string-lists or digital-line
        theorem: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Draw a clock diagram.
    Svg {
        pattern: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Query the rhythm corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CorpusCommand {
    List(ListArgs),
    Show {
        id: String,
    },
    /// Re-validate every corpus invariant.
    Check,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// none, authentic, quasi or pseudo
    #[arg(long)]
    aksak: Option<String>,
    /// euclidean, reverse, both or neither
    #[arg(long)]
    string_class: Option<String>,
    /// Substring of an id or traditional name.
    #[arg(long)]
    name: Option<String>,
    /// Only E(k,n) entries.
    #[arg(long, conflicts_with = "claves")]
    euclidean: bool,
    /// Only clave timelines.
    #[arg(long)]
    claves: bool,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
    broken_pipe: bool,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
        broken_pipe: false,
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure {
        broken_pipe: e.kind() == io::ErrorKind::BrokenPipe,
        ..usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        // A closed pipe (e.g. `| head`) is not worth reporting.
        Err(f) if f.broken_pipe => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let io_err = io_failure;
    match cli.command {
        Command::Gen { k, n, algo, rotate } => {
            let r = generate(k, n, &algo)?.rotate(rotate);
            writeln!(out, "{}", r.to_box()).map_err(io_err)?;
            let seq = r.distance_seq().map_err(usage)?;
            writeln!(out, "{seq}").map_err(io_err)?;
            writeln!(out, "{}", r.to_subset_string()).map_err(io_err)?;
            Ok(0)
        }
        Command::Analyze { patterns } => {
            let inputs: Vec<(String, String)> = if patterns.is_empty() {
                let mut v = Vec::new();
                for (i, line) in io::stdin().lock().lines().enumerate() {
                    let line = line.map_err(io_err)?;
                    if !line.trim().is_empty() {
                        v.push((format!("stdin line {}", i + 1), line.trim().to_string()));
                    }
                }
                v
            } else {
                patterns
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| (format!("argument {}", i + 1), p))
                    .collect()
            };
            for (i, (origin, text)) in inputs.iter().enumerate() {
                let r: Rhythm = text
                    .parse()
                    .map_err(|e| usage(format!("{origin}: cannot parse {text:?}: {e}")))?;
                if i > 0 {
                    writeln!(out).map_err(io_err)?;
                }
                write!(out, "{}", AnalysisReport::of(&r)).map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Verify { theorem, max_n } => {
            let t: Theorem = theorem.parse().map_err(usage)?;
            let report = t.run(max_n).map_err(usage)?;
            writeln!(out, "{report}").map_err(io_err)?;
            Ok(if report.passed() {
                0
            } else {
                EXIT_COUNTEREXAMPLE
            })
        }
        Command::Svg { pattern, output } => {
            let r: Rhythm = pattern
                .parse()
                .map_err(|e| usage(format!("cannot parse {pattern:?}: {e}")))?;
            let svg = render_svg(&r);
            match output {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
                None => out.write_all(svg.as_bytes()).map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Corpus(cmd) => corpus_command(cmd, cli.corpus, out),
    }
}

fn generate(k: usize, n: usize, algo: &str) -> Result<Rhythm, Failure> {
    let r = if let Some(m) = algo.strip_prefix("generated:") {
        let m: usize = m
            .parse()
            .map_err(|_| usage(format!("bad generator step {m:?}")))?;
        generated(k, n, m)
    } else {
        let a = EvenAlgorithm::ALL
            .into_iter()
            .find(|a| a.name() == algo)
            .ok_or_else(|| usage(format!("unknown algorithm {algo:?}")))?;
        a.generate(k, n)
    };
    r.map_err(usage)
}

fn open_corpus(path: Option<PathBuf>) -> Result<Corpus, CorpusError> {
    match path {
        Some(p) => load_corpus_from_path(&p),
        None => load_corpus(),
    }
}

fn corpus_failure(e: CorpusError) -> Failure {
    let code = match e {
        CorpusError::Invariant { .. } => EXIT_COUNTEREXAMPLE,
        _ => EXIT_USAGE,
    };
    Failure { code, ..usage(e) }
}

fn corpus_command(
    cmd: CorpusCommand,
    path: Option<PathBuf>,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let io_err = io_failure;
    let corpus = open_corpus(path).map_err(corpus_failure)?;
    match cmd {
        CorpusCommand::List(args) => {
            let filter = CorpusFilter {
                k: args.k,
                n: args.n,
                aksak: args
                    .aksak
                    .map(|s| s.parse::<AksakClass>())
                    .transpose()
                    .map_err(usage)?,
                string_class: args
                    .string_class
                    .map(|s| s.parse::<StringClass>())
                    .transpose()
                    .map_err(usage)?,
                kind: match (args.euclidean, args.claves) {
                    (true, _) => Some(EntryKind::Euclidean),
                    (_, true) => Some(EntryKind::Clave),
                    _ => None,
                },
                name: args.name,
            };
            let rows = corpus.query(&filter);
            let id_w = rows.iter().map(|e| e.id.len()).max().unwrap_or(2).max(2);
            let pat_w = rows.iter().map(|e| e.n).max().unwrap_or(7).max(7);
            writeln!(
                out,
                "{:<id_w$}  {:>2}  {:>2}  {:<pat_w$}  {:<9}  {:<9}  NAME",
                "ID", "K", "N", "PATTERN", "AKSAK", "STRING"
            )
            .map_err(io_err)?;
            for e in rows {
                let first = e.names.first().map(|n| n.name.as_str()).unwrap_or("");
                writeln!(
                    out,
                    "{:<id_w$}  {:>2}  {:>2}  {:<pat_w$}  {:<9}  {:<9}  {first}",
                    e.id,
                    e.k,
                    e.n,
                    e.pattern.as_str(),
                    e.aksak.name(),
                    e.string_class.name()
                )
                .map_err(io_err)?;
            }
            Ok(0)
        }
        CorpusCommand::Show { id } => {
            let e = corpus
                .get(&id)
                .ok_or_else(|| usage(format!("no corpus entry {id:?}")))?;
            writeln!(out, "{} (line {})", e.id, e.line).map_err(io_err)?;
            for name in &e.names {
                writeln!(out, "  name: {name}").map_err(io_err)?;
            }
            if !e.notes.is_empty() {
                writeln!(out, "  notes: {}", e.notes).map_err(io_err)?;
            }
            writeln!(
                out,
                "  necklace only: {}",
                if e.is_necklace_only { "yes" } else { "no" }
            )
            .map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
            write!(out, "{}", AnalysisReport::of(&e.rhythm)).map_err(io_err)?;
            Ok(0)
        }
        CorpusCommand::Check => {
            let problems = corpus.check();
            for (id, p) in &problems {
                writeln!(out, "{id}: {p}").map_err(io_err)?;
            }
            if problems.is_empty() {
                let euclid = corpus
                    .entries()
                    .iter()
                    .filter(|e| e.kind == EntryKind::Euclidean)
                    .count();
                writeln!(
                    out,
                    "ok: {} entries ({euclid} Euclidean, {} claves)",
                    corpus.len(),
                    corpus.len() - euclid
                )
                .map_err(io_err)?;
                Ok(0)
            } else {
                Ok(EXIT_COUNTEREXAMPLE)
            }
        }
    }
}

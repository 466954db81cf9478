//! `sokhan`: normalize, split and scan Persian text from the command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sokhan::segment::parse_gold;
use sokhan::{Mode, Pipeline, PipelineConfig, Resources, Segmenter};

#[derive(Parser)]
#[command(name = "sokhan", version, about = "Persian text normalization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize text line by line.
    Normalize(NormalizeArgs),
    /// Print one sentence per line.
    Split(SplitArgs),
    /// Print segmentation accuracy against a gold file.
    EvalSplit(EvalArgs),
    /// Print detected spans as start, end, class and raw text, tab-separated.
    Scan(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input file; standard input when absent.
    input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// key=value settings, overridden by flags.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct NormalizeArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long, value_name = "general|speech")]
    mode: Option<Mode>,
    /// Pick renderings at random from this seed.
    #[arg(long, value_name = "N", conflicts_with = "template_index")]
    seed: Option<u64>,
    /// Always use rendering N.
    #[arg(long, value_name = "N")]
    template_index: Option<usize>,
    /// Skip a pass; repeatable.
    #[arg(long, value_name = "PASS")]
    disable: Vec<String>,
    /// Print every rendering of each line, then a blank line.
    #[arg(long)]
    enumerate: bool,
}

#[derive(Args)]
struct SplitArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Segments with more tokens are also cut after verbs.
    #[arg(long, value_name = "N")]
    verb_split_threshold: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    gold: PathBuf,
    #[arg(long, value_name = "N")]
    verb_split_threshold: Option<usize>,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<sokhan::Error> for Failure {
    fn from(e: sokhan::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_error(path: Option<&Path>, e: io::Error) -> Failure {
    match path {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| io_error(Some(p), e)),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| io_error(None, e))?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_error(Some(p), e)),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| io_error(None, e)),
    }
}

fn base_config(path: Option<&Path>) -> Result<PipelineConfig, Failure> {
    let mut config = PipelineConfig::default();
    if let Some(p) = path {
        let source = fs::read_to_string(p).map_err(|e| io_error(Some(p), e))?;
        config.apply_file(&source)?;
    }
    Ok(config)
}

/// Applies `f` to every line on all available cores, keeping input order.
fn map_lines(lines: &[&str], f: impl Fn(usize, &str) -> Result<String, Failure> + Sync) -> Result<Vec<String>, Failure> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(lines.len().max(1));
    let chunk = lines.len().div_ceil(workers).max(1);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = lines
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                scope.spawn(move || {
                    part.iter().enumerate().map(|(i, line)| f(c * chunk + i, line)).collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        let mut out = Vec::with_capacity(lines.len());
        for h in handles {
            out.extend(h.join().expect("worker panicked")?);
        }
        Ok(out)
    })
}

fn normalize(args: NormalizeArgs) -> Result<(), Failure> {
    let mut config = base_config(args.io.config.as_deref())?;
    if let Some(mode) = args.mode {
        config.mode = mode;
    }
    if args.enumerate {
        if args.mode == Some(Mode::General) {
            return Err(Failure::Usage("--enumerate produces spoken text and needs speech mode".into()));
        }
        config.mode = Mode::Speech;
    }
    if let Some(seed) = args.seed {
        config.set("seed", &seed.to_string())?;
    }
    if let Some(index) = args.template_index {
        config.set("template-index", &index.to_string())?;
    }
    for pass in &args.disable {
        config.set("disable", pass)?;
    }
    let pipeline = Pipeline::new(Resources::bundled(), config)?;
    let input = read_input(args.io.input.as_deref())?;
    let lines: Vec<&str> = input.lines().collect();
    let out = map_lines(&lines, |n, line| {
        if args.enumerate {
            let variants = pipeline.enumerate_verbalizations(line).map_err(|e| Failure::Usage(format!("line {}: {e}", n + 1)))?;
            return Ok(variants.into_iter().map(|v| v + "\n").collect());
        }
        Ok(match pipeline.config().mode {
            Mode::General => pipeline.normalize_general(line),
            Mode::Speech => pipeline.normalize_speech_with(line, &mut pipeline.selector(n as u64)),
        })
    })?;
    let mut text = out.join("\n");
    if !lines.is_empty() {
        text.push('\n');
    }
    write_output(args.io.out.as_deref(), &text)
}

fn split(args: SplitArgs) -> Result<(), Failure> {
    let mut config = base_config(args.io.config.as_deref())?;
    if let Some(n) = args.verb_split_threshold {
        config.set("verb-split-threshold", &n.to_string())?;
    }
    let pipeline = Pipeline::new(Resources::bundled(), config)?;
    let input = read_input(args.io.input.as_deref())?;
    let mut out = String::new();
    for line in input.lines() {
        for sentence in pipeline.split_sentences(line) {
            out.push_str(&sentence);
            out.push('\n');
        }
    }
    write_output(args.io.out.as_deref(), &out)
}

fn eval_split(args: EvalArgs) -> Result<(), Failure> {
    let gold = fs::read_to_string(&args.gold).map_err(|e| io_error(Some(&args.gold), e))?;
    let mut segmenter = Segmenter::new(Resources::bundled());
    if let Some(n) = args.verb_split_threshold {
        if n == 0 {
            return Err(Failure::Usage("verb-split-threshold must be positive".into()));
        }
        segmenter = segmenter.with_threshold(n);
    }
    let accuracy = segmenter.evaluate(&parse_gold(&gold));
    write_output(None, &format!("{accuracy:.4}\n"))
}

fn scan(args: IoArgs) -> Result<(), Failure> {
    let config = base_config(args.config.as_deref())?;
    let pipeline = Pipeline::new(Resources::bundled(), config)?;
    let input = read_input(args.input.as_deref())?;
    let mut out = String::new();
    for line in input.lines() {
        for span in pipeline.scan(line) {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", span.start, span.end, span.class, span.raw));
        }
    }
    write_output(args.out.as_deref(), &out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Normalize(a) => normalize(a),
        Command::Split(a) => split(a),
        Command::EvalSplit(a) => eval_split(a),
        Command::Scan(a) => scan(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("sokhan: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Io(m)) => {
            eprintln!("sokhan: {m}");
            ExitCode::from(2)
        }
    }
}

//! `descry` -- descriptive pattern discovery over string samples and traces.
//!
//! Exit codes: 0 success, 1 file or parse errors, 2 violated preconditions
//! (arity, class membership, thresholds, size guards). `discover` exits 2
//! when the initial pattern already misses the support threshold, after
//! printing a report with the achieved support.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use descry::classes::PatternClass;
use descry::discovery::{self, CandidateOrder, DiscoveryConfig, PositionOrder, Strategy};
use descry::pattern::{Alphabet, ConstrainedPattern, GapConstraints, Pattern, Symbol};
use descry::report::{
    CheckReport, ConfigReport, MatchReport, RunReport, SupportReport, VerifyReport, WitnessReport, WordMatchReport,
};
use descry::sample::Sample;
use descry::subseq;
use descry::sweeps;
use descry::trace;
use descry::{angluin, Error, Ratio};

#[derive(Parser)]
#[command(name = "descry", version, about = "Descriptive pattern discovery for string samples and event traces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a descriptive subsequence pattern for a sample
    Discover(DiscoverArgs),
    /// Match a pattern against a word or every word of a sample
    Match(MatchArgs),
    /// Check whether a given pattern is descriptive for a sample
    Check(DiscoverArgs),
    /// Run brute-force-oracle agreement sweeps
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DiscoverArgs {
    /// Trace file: one trace per line, optional `#alphabet: ...` header
    #[arg(long)]
    sample: PathBuf,
    /// Read each trace line as single-character symbols
    #[arg(long)]
    chars: bool,
    /// Pattern length
    #[arg(long)]
    length: usize,
    /// Gap bounds `lo-hi,...` (length-1 entries, `inf` upper allowed; empty for length 1)
    #[arg(long, default_value = "")]
    gaps: String,
    /// Support threshold: p/q, integer, or exact decimal
    #[arg(long, default_value = "1")]
    support: String,
    /// Pattern class: all | regular | noncross | maxvars:k
    #[arg(long, default_value = "all")]
    class: String,
    /// Position visit order: l2r | r2l | random:SEED
    #[arg(long, default_value = "l2r")]
    order: String,
    /// Candidate order at each position: terms-first | vars-first
    #[arg(long, default_value = "terms-first")]
    candidates: String,
    /// Start pattern (defaults to the all-variables pattern; mandatory for check)
    #[arg(long)]
    start: Option<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MatchArgs {
    /// Single word (whitespace-free input splits per character)
    #[arg(long, conflicts_with = "sample")]
    word: Option<String>,
    /// Trace file of words to match
    #[arg(long)]
    sample: Option<PathBuf>,
    /// Read trace lines as single-character symbols
    #[arg(long)]
    chars: bool,
    /// Pattern in `$k` / token syntax
    #[arg(long)]
    pattern: String,
    /// Gap bounds for subsequence matching (required unless --angluin)
    #[arg(long)]
    gaps: Option<String>,
    /// Classical matching: variables take whole words, the pattern must
    /// spell the word exactly
    #[arg(long)]
    angluin: bool,
    /// List up to N witnesses per word (subsequence mode, single word)
    #[arg(long, default_value_t = 1)]
    witnesses: usize,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep suite: tiny (exhaustive) | random (seeded, at oracle caps)
    #[arg(long)]
    suite: String,
    /// Seed for the random suite
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Cases per random sweep
    #[arg(long, default_value_t = 10_000)]
    cases: usize,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

enum Failure {
    /// File IO or malformed input text.
    Parse(String),
    /// Violated precondition: arity, class, threshold, guard.
    Config(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Config(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Config(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = format!("error: {e}");
        match e {
            Error::EmptyAlphabet
            | Error::DuplicateSymbol(_)
            | Error::EmptySymbolToken
            | Error::EmptyPattern
            | Error::UnknownSymbol(_)
            | Error::BadVariableToken(_)
            | Error::BadGapBound(_)
            | Error::EmptyWord
            | Error::EmptySample
            | Error::BadRatio(_)
            | Error::BadClassSpec(_)
            | Error::BadStrategySpec(_) => Failure::Parse(msg),
            _ => Failure::Config(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Discover(args) => cmd_discover(args),
        Command::Match(args) => cmd_match(args),
        Command::Check(args) => cmd_check(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn read_sample(path: &PathBuf, chars: bool) -> Result<Sample, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("error: cannot read {}: {e}", path.display())))?;
    Ok(trace::parse_trace_file(&text, chars)?)
}

fn build_config(args: &DiscoverArgs, sample: &Sample) -> Result<DiscoveryConfig, Failure> {
    let constraints = GapConstraints::parse(&args.gaps)?;
    let threshold = Ratio::parse(&args.support)?;
    let class = PatternClass::parse(&args.class)?;
    let strategy = Strategy {
        position_order: PositionOrder::parse(&args.order)?,
        candidate_order: CandidateOrder::parse(&args.candidates)?,
    };
    let start = match &args.start {
        Some(text) => {
            let p = Pattern::parse(text, sample.alphabet())?;
            Some(ConstrainedPattern::new(p, constraints.clone())?)
        }
        None => None,
    };
    let cfg = DiscoveryConfig { length: args.length, constraints, threshold, class, strategy, start };
    cfg.validate()?;
    Ok(cfg)
}

fn cmd_discover(args: DiscoverArgs) -> Result<u8, Failure> {
    let sample = read_sample(&args.sample, args.chars)?;
    let cfg = build_config(&args, &sample)?;
    let started = Instant::now();
    match discovery::discover_subseq(&sample, &cfg) {
        Ok((result, trace)) => {
            let support = subseq::support(&sample, &result);
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            let report = RunReport::new(&sample, &cfg, &result, &trace, support, elapsed);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print_run_report(&report);
            }
            Ok(0)
        }
        Err(Error::InitialSupport { achieved, required }) => {
            if args.json {
                let report = serde_json::json!({
                    "config": ConfigReport::new(&sample, &cfg),
                    "error": "initial-support",
                    "achieved": achieved.to_string(),
                    "required": required.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("initial pattern support {achieved} is below threshold {required}");
            }
            Ok(2)
        }
        Err(e) => Err(e.into()),
    }
}

fn print_run_report(report: &RunReport) {
    println!("pattern: {}", report.pattern);
    if report.canonical_pattern != report.pattern {
        println!("canonical: {}", report.canonical_pattern);
    }
    println!("support: {} ({:.3})", report.support.fraction, report.support.decimal);
    for step in &report.trace {
        let tried: Vec<String> = step
            .attempts
            .iter()
            .map(|a| {
                let verdict = if a.accepted {
                    "ok".to_string()
                } else if !a.in_class {
                    "not in class".to_string()
                } else {
                    format!("support {}", a.support.as_deref().unwrap_or("-"))
                };
                format!("{} ({verdict})", a.candidate)
            })
            .collect();
        println!(
            "  position {} [{}]: {} -> {}",
            step.position,
            step.variable,
            if tried.is_empty() { "no candidates".to_string() } else { tried.join(", ") },
            step.outcome
        );
    }
}

fn cmd_match(args: MatchArgs) -> Result<u8, Failure> {
    if args.angluin && args.gaps.is_some() {
        return Err(Failure::Config("error: --angluin and --gaps are mutually exclusive".into()));
    }
    if !args.angluin && args.gaps.is_none() {
        return Err(Failure::Config("error: subsequence matching needs --gaps (or pass --angluin)".into()));
    }
    if args.witnesses == 0 {
        return Err(Failure::Config("error: --witnesses must be at least 1".into()));
    }

    // alphabet comes from the sample file, or is inferred from word + pattern
    let (alphabet, words): (Alphabet, Vec<Vec<Symbol>>) = match (&args.word, &args.sample) {
        (Some(text), None) => {
            let alphabet = trace::alphabet_for_match(text, &args.pattern)?;
            let word = trace::parse_word_text(text, &alphabet)?;
            (alphabet, vec![word])
        }
        (None, Some(path)) => {
            let sample = read_sample(path, args.chars)?;
            (sample.alphabet().clone(), sample.words().to_vec())
        }
        _ => return Err(Failure::Config("error: pass exactly one of --word or --sample".into())),
    };
    let pattern = Pattern::parse(&args.pattern, &alphabet)?;

    let mut report = MatchReport {
        mode: if args.angluin { "angluin".into() } else { "subseq".into() },
        pattern: pattern.render(&alphabet),
        gaps: args.gaps.clone(),
        alphabet: alphabet.tokens().map(str::to_string).collect(),
        words: Vec::new(),
        support: None,
        witnesses: None,
    };

    if args.angluin {
        for w in &words {
            let result = angluin::member(w, &pattern);
            report.words.push(WordMatchReport {
                word: descry::report::word_text(w, &alphabet),
                matched: result.matched,
                witness: result.witness.map(|h| WitnessReport::from_word_substitution(&h, &alphabet)),
            });
        }
    } else {
        let constraints = GapConstraints::parse(args.gaps.as_deref().unwrap_or(""))?;
        let cp = ConstrainedPattern::new(pattern.clone(), constraints)?;
        for w in &words {
            let result = subseq::match_subseq(w, &cp);
            report.words.push(WordMatchReport {
                word: descry::report::word_text(w, &alphabet),
                matched: result.matched,
                witness: result
                    .witness
                    .as_ref()
                    .map(|(h, e)| WitnessReport::from_subseq_witness(h, e, &alphabet)),
            });
        }
        if args.witnesses > 1 && words.len() == 1 {
            let all = subseq::enumerate_embeddings(&words[0], &cp, args.witnesses);
            report.witnesses = Some(
                all.iter()
                    .map(|(h, e)| WitnessReport::from_subseq_witness(h, e, &alphabet))
                    .collect(),
            );
        }
    }
    if words.len() > 1 {
        let matched = report.words.iter().filter(|w| w.matched).count();
        report.support = Some(SupportReport::new(Ratio::new(matched as u64, words.len() as u64)));
    }

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print_match_report(&report);
    }
    Ok(0)
}

fn print_match_report(report: &MatchReport) {
    for w in &report.words {
        if w.matched {
            print!("{}: matched", w.word);
            if let Some(witness) = &w.witness {
                let bindings: Vec<String> =
                    witness.assignment.iter().map(|(v, image)| format!("{v} = {image}")).collect();
                if !bindings.is_empty() {
                    print!("  [{}]", bindings.join(", "));
                }
                if let Some(embedding) = &witness.embedding {
                    let positions: Vec<String> = embedding.iter().map(usize::to_string).collect();
                    print!("  @ {}", positions.join(","));
                }
            }
            println!();
        } else {
            println!("{}: unmatched", w.word);
        }
    }
    if let Some(support) = &report.support {
        println!("support: {} ({:.3})", support.fraction, support.decimal);
    }
    if let Some(witnesses) = &report.witnesses {
        println!("witnesses: {}", witnesses.len());
        for witness in witnesses {
            let bindings: Vec<String> =
                witness.assignment.iter().map(|(v, image)| format!("{v} = {image}")).collect();
            let positions: Vec<String> = witness
                .embedding
                .as_deref()
                .unwrap_or(&[])
                .iter()
                .map(usize::to_string)
                .collect();
            println!("  [{}] @ {}", bindings.join(", "), positions.join(","));
        }
    }
}

fn cmd_check(args: DiscoverArgs) -> Result<u8, Failure> {
    if args.start.is_none() {
        return Err(Failure::Config("error: check needs --start".into()));
    }
    let sample = read_sample(&args.sample, args.chars)?;
    let cfg = build_config(&args, &sample)?;
    let start = cfg.start.clone().expect("start parsed above");

    let started = Instant::now();
    let (result, _trace) = discovery::discover_subseq(&sample, &cfg)?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let descriptive = result.pattern().canonicalize() == start.pattern().canonicalize();
    let support = subseq::support(&sample, &start);
    let report = CheckReport {
        config: ConfigReport::new(&sample, &cfg),
        pattern: start.pattern().render(sample.alphabet()),
        descriptive,
        certificate: (!descriptive).then(|| result.pattern().render(sample.alphabet())),
        support: SupportReport::new(support),
        wall_time_ms: elapsed,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if descriptive {
        println!("descriptive");
    } else {
        println!("not-descriptive");
        println!("certificate: {}", report.certificate.as_deref().unwrap_or(""));
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let started = Instant::now();
    let (sweeps, seed, cases) = match args.suite.as_str() {
        "tiny" => (sweeps::tiny_suite()?, None, None),
        "random" => (sweeps::random_suite(args.seed, args.cases)?, Some(args.seed), Some(args.cases)),
        other => return Err(Failure::Config(format!("error: unknown suite `{other}` (expected tiny or random)"))),
    };
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let report = VerifyReport::new(&args.suite, seed, cases, &sweeps, elapsed);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for sweep in &report.sweeps {
            println!("{}: {} cases, {} disagreements", sweep.label, sweep.cases, sweep.disagreements.len());
            for d in &sweep.disagreements {
                println!("  {} (matcher: {}, oracle: {})", d.case, d.main, d.oracle);
            }
        }
    }
    Ok(if report.passed { 0 } else { 1 })
}

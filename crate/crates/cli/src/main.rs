//! `kbinom` — decide k-binomial equivalence of words from the shell.
//!
//! Two words are k-binomially equivalent when every nonempty word of length
//! at most k occurs as a scattered factor (subsequence) equally often in
//! both. Subcommands: `test` compares two words, `match` scans a text for
//! factors equivalent to a pattern, `oracle` prints a word's coefficient
//! table, `bench` times the deciders on random inputs.
//!
//! Exit codes: 0 equivalent / any match, 1 not equivalent / no match,
//! 2 usage or input error, 3 prime-sampling failure.

mod bench;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kbinom::{
    binomial_table, find_equivalent_factors, mc_equivalent, oracle_equivalent, path_equivalent,
    McConfig, McOutcome, Method, Word,
};

#[derive(Parser)]
#[command(
    name = "kbinom",
    version,
    about = "Decide k-binomial equivalence of words",
    long_about = "Decide whether words are k-binomially equivalent: whether every nonempty \
                  word of length at most k occurs as a scattered factor (subsequence) equally \
                  often in both. The default decider is a Monte-Carlo fingerprint with \
                  one-sided error; `--method det` gives an exact polynomial-time answer with \
                  a witness, `--method oracle` an exhaustive reference comparison."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words are k-binomially equivalent
    Test(DecideArgs),
    /// List all factors of a text that are k-binomially equivalent to a pattern
    Match(DecideArgs),
    /// Print a word's table of scattered-factor counts up to length k
    Oracle(OracleArgs),
    /// Time the deciders on random word pairs and fit a scaling exponent
    Bench(bench::BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum MethodArg {
    /// Exhaustive table comparison (exponential in k; small inputs only)
    Oracle,
    /// Deterministic automaton-based decision with a witness
    Det,
    /// Monte-Carlo fingerprint (never wrong when it says "not equivalent")
    Mc,
}

impl From<MethodArg> for Method {
    fn from(arg: MethodArg) -> Method {
        match arg {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Det => Method::Det,
            MethodArg::Mc => Method::Mc,
        }
    }
}

#[derive(Args)]
struct DecideArgs {
    /// Equivalence order: factors up to this length are compared
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,

    /// Decider to run
    #[arg(long, value_enum, default_value_t = MethodArg::Mc)]
    method: MethodArg,

    /// Seed for all randomness (default: OS entropy; always echoed)
    #[arg(long)]
    seed: Option<u64>,

    /// Independent Monte-Carlo trials; false-accept odds drop like n^-trials
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,

    /// Single Miller-Rabin round and a lean prime-candidate budget
    #[arg(long)]
    paper_faithful: bool,

    /// Override the sampled primes' bit length
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    mc_bits: Option<u32>,

    /// Override the prime sampler's candidate budget
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    mc_budget: Option<u32>,

    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,

    /// Read the input words from a file instead (one word per line;
    /// blank lines and #-comments are skipped)
    #[arg(long, conflicts_with = "words")]
    file: Option<PathBuf>,

    /// Input words: WORD1 WORD2 for `test`, TEXT PATTERN for `match`
    #[arg(value_name = "WORD")]
    words: Vec<String>,
}

#[derive(Args)]
struct OracleArgs {
    /// Table order: factors up to this length are listed
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,

    /// Echoed in the report for uniformity; the table itself is deterministic
    #[arg(long)]
    seed: Option<u64>,

    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,

    /// Read the input word from a file instead
    #[arg(long, conflicts_with = "words")]
    file: Option<PathBuf>,

    /// The word to tabulate
    #[arg(value_name = "WORD")]
    words: Vec<String>,
}

/// Failures after argument parsing. Usage and input problems exit 2, a
/// failed prime search exits 3.
pub(crate) enum Failure {
    Usage(String),
    Sampling(String),
}

impl From<kbinom::Error> for Failure {
    fn from(err: kbinom::Error) -> Failure {
        match err {
            kbinom::Error::PrimeSamplingFailed { .. } => Failure::Sampling(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Test(args) => run_test(args),
        Command::Match(args) => run_match(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Bench(args) => bench::run(args),
    };
    match run {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Sampling(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// The words for a subcommand, from the positional arguments or `--file`.
fn load_words(
    words: &[String],
    file: &Option<PathBuf>,
    expected: &[&str],
) -> Result<Vec<Word>, Failure> {
    let texts: Vec<String> = match file {
        Some(path) => fs::read_to_string(path)
            .map_err(|err| Failure::Usage(format!("cannot read {}: {err}", path.display())))?
            .lines()
            .map(|line| line.trim_end_matches('\r'))
            .filter(|line| !line.is_empty() && !line.starts_with('#'))
            .map(str::to_owned)
            .collect(),
        None => words.to_vec(),
    };
    if texts.len() != expected.len() {
        return Err(Failure::Usage(format!(
            "expected exactly {} input word{} ({}), got {}",
            expected.len(),
            if expected.len() == 1 { "" } else { "s" },
            expected.join(", "),
            texts.len()
        )));
    }
    texts
        .iter()
        .map(|text| Word::parse(text).map_err(Failure::from))
        .collect()
}

pub(crate) fn effective_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

/// Monte-Carlo configuration for a run: defaults derived from the inputs,
/// then the command-line overrides.
fn mc_config(args: &DecideArgs, w1: &Word, w2: &Word, seed: u64) -> McConfig {
    let mut config = if args.paper_faithful {
        McConfig::paper_faithful(w1, w2, args.k, seed)
    } else {
        McConfig::for_words(w1, w2, args.k, seed)
    };
    config.trials = args.trials;
    if let Some(bits) = args.mc_bits {
        config.bits = bits;
        config.candidate_budget = if args.paper_faithful {
            bits * bits
        } else {
            4 * bits * bits
        };
    }
    if let Some(budget) = args.mc_budget {
        config.candidate_budget = budget;
    }
    config
}

fn run_test(args: DecideArgs) -> Result<ExitCode, Failure> {
    let words = load_words(&args.words, &args.file, &["WORD1", "WORD2"])?;
    let (w1, w2) = (&words[0], &words[1]);
    let seed = effective_seed(args.seed);
    let method = Method::from(args.method);

    let start = Instant::now();
    let (equivalent, witness, outcome): (bool, Option<Word>, Option<McOutcome>) = match method {
        Method::Oracle => (oracle_equivalent(w1, w2, args.k), None, None),
        Method::Det => {
            let verdict = path_equivalent(w1, w2, args.k);
            (verdict.is_equivalent(), verdict.witness().cloned(), None)
        }
        Method::Mc => {
            let outcome = mc_equivalent(w1, w2, args.k, &mc_config(&args, w1, w2, seed))?;
            (outcome.equivalent, None, Some(outcome))
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let report = report::TestReport {
        command: "test",
        inputs: vec![w1.to_string(), w2.to_string()],
        k: args.k,
        method: method.name(),
        verdict: if equivalent {
            "equivalent"
        } else {
            "not-equivalent"
        },
        witness: witness.as_ref().map(Word::to_string),
        trials: outcome.as_ref().map(report::trial_reports),
        trial_count: args.trials,
        paper_faithful: args.paper_faithful,
        elapsed_ms,
        seed,
    };
    if args.json {
        report::emit(&report);
    } else {
        if method == Method::Mc {
            eprintln!("seed: {seed}");
        }
        match &report.witness {
            Some(witness) => println!("NOT-EQUIVALENT witness={witness}"),
            None if equivalent => println!("EQUIVALENT"),
            None => println!("NOT-EQUIVALENT"),
        }
    }
    Ok(ExitCode::from(u8::from(!equivalent)))
}

fn run_match(args: DecideArgs) -> Result<ExitCode, Failure> {
    let words = load_words(&args.words, &args.file, &["TEXT", "PATTERN"])?;
    let (text, pattern) = (&words[0], &words[1]);
    let seed = effective_seed(args.seed);
    let method = Method::from(args.method);

    let start = Instant::now();
    let config = mc_config(&args, text, pattern, seed);
    let result = find_equivalent_factors(text, pattern, args.k, method, &config)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let positions = result.into_positions();
    let matched = !positions.is_empty();
    let report = report::MatchReport {
        command: "match",
        inputs: vec![text.to_string(), pattern.to_string()],
        k: args.k,
        method: method.name(),
        verdict: if matched { "match" } else { "no-match" },
        positions,
        trial_count: args.trials,
        paper_faithful: args.paper_faithful,
        elapsed_ms,
        seed,
    };
    if args.json {
        report::emit(&report);
    } else {
        if method == Method::Mc {
            eprintln!("seed: {seed}");
        }
        for position in &report.positions {
            println!("{position}");
        }
    }
    Ok(ExitCode::from(u8::from(!matched)))
}

fn run_oracle(args: OracleArgs) -> Result<ExitCode, Failure> {
    let words = load_words(&args.words, &args.file, &["WORD"])?;
    let seed = effective_seed(args.seed);

    let start = Instant::now();
    let table = binomial_table(&words[0], args.k);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    if args.json {
        let report = report::OracleReport {
            command: "oracle",
            inputs: vec![words[0].to_string()],
            k: args.k,
            method: "oracle",
            table: report::table_reports(&table),
            elapsed_ms,
            seed,
        };
        report::emit(&report);
    } else {
        print!("{}", table.to_text());
    }
    Ok(ExitCode::SUCCESS)
}

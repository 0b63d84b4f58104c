//! Seeded timing harness. Each grid point generates a random binary word
//! and a shuffle of it (same letter counts, so no decider can bail out at
//! the first letter), runs the decider a few times, and reports the median
//! wall-clock time. For the Monte-Carlo decider a log-log fit of time
//! against word length estimates the scaling exponent; the expected value
//! is about 1, since its work is linear in the word for fixed k.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::Args;
use kbinom::{
    mc_equivalent, oracle_equivalent, path_equivalent, random_word, Alphabet, McConfig, Method,
    Word,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{self, BenchReport, BenchRow};
use crate::{effective_seed, Failure, MethodArg};

/// The oracle builds full coefficient tables and is exponential in k, so
/// the harness refuses grids where that blows up.
const ORACLE_MAX_N: u64 = 64;
const ORACLE_MAX_K: u32 = 8;

#[derive(Args)]
pub struct BenchArgs {
    /// Equivalence order used at every grid point
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,

    /// Restrict to one decider (default: all three, each on its own grid)
    #[arg(long, value_enum)]
    method: Option<MethodArg>,

    /// Seed for word generation and the Monte-Carlo decider
    #[arg(long)]
    seed: Option<u64>,

    /// Monte-Carlo trials per decider call
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,

    /// Single Miller-Rabin round and a lean prime-candidate budget
    #[arg(long)]
    paper_faithful: bool,

    /// Word lengths to time, comma separated (default depends on the decider)
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
    sizes: Option<Vec<u64>>,

    /// Repetitions per grid point; the median is reported
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    reps: u32,

    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

fn default_sizes(method: Method) -> Vec<u64> {
    match method {
        Method::Oracle => vec![8, 16, 32, 64],
        Method::Det => vec![25, 50, 100, 200],
        Method::Mc => vec![4096, 8192, 16384, 32768, 65536, 131072],
    }
}

pub fn run(args: BenchArgs) -> Result<ExitCode, Failure> {
    let seed = effective_seed(args.seed);
    let methods: Vec<Method> = match args.method {
        Some(arg) => vec![Method::from(arg)],
        None => vec![Method::Oracle, Method::Det, Method::Mc],
    };

    // keep the oracle inside its feasible region: a hard error when it was
    // requested explicitly, a skip note when it is only part of the default
    // sweep
    let mut plan: Vec<(Method, Vec<u64>)> = Vec::new();
    for &method in &methods {
        let sizes = args.sizes.clone().unwrap_or_else(|| default_sizes(method));
        if method == Method::Oracle {
            let too_long = sizes.iter().copied().max().unwrap_or(0) > ORACLE_MAX_N;
            if args.k > ORACLE_MAX_K || too_long {
                let limits = format!(
                    "the oracle decider is exponential; keep n <= {ORACLE_MAX_N} and k <= {ORACLE_MAX_K}"
                );
                if args.method.is_some() {
                    return Err(Failure::Usage(limits));
                }
                eprintln!("skipping oracle: {limits}");
                continue;
            }
        }
        plan.push((method, sizes));
    }

    let start = Instant::now();
    let mut rows: Vec<BenchRow> = Vec::new();
    for (method, sizes) in &plan {
        for &n in sizes {
            let median_ms = time_point(*method, n as usize, &args, seed)?;
            rows.push(BenchRow {
                method: method.name(),
                n: n as usize,
                k: args.k,
                median_ms,
            });
        }
    }
    let mc_points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|row| row.method == "mc")
        .map(|row| ((row.n as f64).ln(), row.median_ms.max(1e-6).ln()))
        .collect();
    let mc_slope = fit_slope(&mc_points);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let report = BenchReport {
        command: "bench",
        k: args.k,
        methods: plan.iter().map(|(m, _)| m.name()).collect(),
        reps: args.reps,
        rows,
        mc_slope,
        trial_count: args.trials,
        paper_faithful: args.paper_faithful,
        elapsed_ms,
        seed,
    };
    if args.json {
        report::emit(&report);
    } else {
        eprintln!("seed: {seed}");
        println!("{:<8} {:>8} {:>3} {:>12}", "method", "n", "k", "median_ms");
        for row in &report.rows {
            println!(
                "{:<8} {:>8} {:>3} {:>12.3}",
                row.method, row.n, row.k, row.median_ms
            );
        }
        if let Some(slope) = report.mc_slope {
            println!("mc scaling exponent (k={}): {slope:.3}", args.k);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Median decider time at one grid point, over `reps` runs on a fixed pair.
fn time_point(method: Method, n: usize, args: &BenchArgs, seed: u64) -> Result<f64, Failure> {
    let (w1, w2) = generate_pair(n, seed ^ (n as u64).rotate_left(17));
    let mut config = if args.paper_faithful {
        McConfig::paper_faithful(&w1, &w2, args.k, seed)
    } else {
        McConfig::for_words(&w1, &w2, args.k, seed)
    };
    config.trials = args.trials;
    let mut samples = Vec::with_capacity(args.reps as usize);
    for _ in 0..args.reps {
        let begin = Instant::now();
        match method {
            Method::Oracle => {
                oracle_equivalent(&w1, &w2, args.k);
            }
            Method::Det => {
                path_equivalent(&w1, &w2, args.k);
            }
            Method::Mc => {
                mc_equivalent(&w1, &w2, args.k, &config)?;
            }
        }
        samples.push(begin.elapsed().as_secs_f64() * 1e3);
    }
    samples.sort_by(|a, b| a.partial_cmp(b).expect("finite timings"));
    Ok(samples[samples.len() / 2])
}

/// A random binary word and a shuffle of it: abelian-equivalent, so the
/// deciders cannot stop at the letter counts.
fn generate_pair(n: usize, seed: u64) -> (Word, Word) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = Arc::new(Alphabet::new("ab".chars()).expect("fixed alphabet"));
    let w1 = random_word(&alphabet, n, &mut rng);
    let mut digits = w1.digits().to_vec();
    digits.shuffle(&mut rng);
    let w2 = Word::from_digits(&alphabet, digits);
    (w1, w2)
}

/// Least-squares slope through (x, y) points; None with fewer than two.
fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    Some(cov / var)
}

//! JSON report shapes. One line of compact JSON per run; the schema shipped
//! in `schema/report.schema.json` describes all four variants. Counts,
//! primes, and field elements are serialized as decimal strings because
//! they routinely exceed 64 bits.

use kbinom::{BinomialTable, McOutcome};
use serde::Serialize;

#[derive(Serialize)]
pub struct TestReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub k: u32,
    pub method: &'static str,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<Vec<TrialReport>>,
    pub trial_count: u32,
    pub paper_faithful: bool,
    pub elapsed_ms: f64,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct TrialReport {
    pub prime: String,
    pub point: String,
    pub difference: String,
}

#[derive(Serialize)]
pub struct MatchReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub k: u32,
    pub method: &'static str,
    pub verdict: &'static str,
    pub positions: Vec<usize>,
    pub trial_count: u32,
    pub paper_faithful: bool,
    pub elapsed_ms: f64,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub command: &'static str,
    pub inputs: Vec<String>,
    pub k: u32,
    pub method: &'static str,
    pub table: Vec<TableEntryReport>,
    pub elapsed_ms: f64,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct TableEntryReport {
    pub factor: String,
    pub count: String,
}

#[derive(Serialize)]
pub struct BenchReport {
    pub command: &'static str,
    pub k: u32,
    pub methods: Vec<&'static str>,
    pub reps: u32,
    pub rows: Vec<BenchRow>,
    /// Log-log slope of the Monte-Carlo decider's median time against the
    /// word length; present when at least two sizes were timed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc_slope: Option<f64>,
    pub trial_count: u32,
    pub paper_faithful: bool,
    pub elapsed_ms: f64,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct BenchRow {
    pub method: &'static str,
    pub n: usize,
    pub k: u32,
    pub median_ms: f64,
}

pub fn trial_reports(outcome: &McOutcome) -> Vec<TrialReport> {
    outcome
        .trials
        .iter()
        .map(|trial| TrialReport {
            prime: trial.prime.to_string(),
            point: trial.point.to_string(),
            difference: trial.difference.to_string(),
        })
        .collect()
}

/// Table entries in the same order as the text form: by length, then
/// lexicographically.
pub fn table_reports(table: &BinomialTable) -> Vec<TableEntryReport> {
    let mut keys: Vec<&Vec<u32>> = table.entries().keys().collect();
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    keys.into_iter()
        .map(|key| TableEntryReport {
            factor: key
                .iter()
                .map(|&d| table.word().alphabet().symbol(d as usize))
                .collect(),
            count: table.entries()[key].to_string(),
        })
        .collect()
}

pub fn emit<T: Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string(report).expect("reports serialize")
    );
}

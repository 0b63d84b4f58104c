//! Pattern matching under k-binomial equivalence: report every factor of a
//! text that is k-binomially equivalent to a pattern.
//!
//! Only windows of the pattern's length can qualify (equivalence at any
//! k ≥ 1 forces equal letter counts, hence equal length), so the matcher
//! slides a window of that size over the text, discards windows whose
//! letter counts already differ from the pattern's, and runs the selected
//! decider on the survivors. Windows are independent and are tested in
//! parallel.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mc::{mc_equivalent, McConfig};
use crate::nfa::path_equivalent;
use crate::oracle::oracle_equivalent;
use crate::word::{joint_alphabet, Word};

/// Which decider examines each window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exhaustive table comparison; exponential in k.
    Oracle,
    /// Deterministic automaton-based test.
    Det,
    /// Monte-Carlo fingerprint; may very rarely report a spurious match,
    /// never misses a true one.
    Mc,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Det => "det",
            Method::Mc => "mc",
        }
    }
}

/// Sorted 1-based start positions of the matching factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    positions: Vec<usize>,
}

impl MatchResult {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn into_positions(self) -> Vec<usize> {
        self.positions
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// All 1-based positions i such that text[i .. i+|pattern|-1] is
/// k-binomially equivalent to the pattern. A pattern longer than the text
/// yields an empty result; an empty pattern is rejected. For the
/// Monte-Carlo method each window draws from its own PRNG stream derived
/// from (seed, position), so results do not depend on scheduling.
pub fn find_equivalent_factors(
    text: &Word,
    pattern: &Word,
    k: u32,
    method: Method,
    config: &McConfig,
) -> Result<MatchResult> {
    scan(text, pattern, k, method, config, true)
}

/// Same scan with the letter-count prefilter disabled; the filter is a pure
/// optimization and tests compare the two.
#[cfg(test)]
fn find_equivalent_factors_unfiltered(
    text: &Word,
    pattern: &Word,
    k: u32,
    method: Method,
    config: &McConfig,
) -> Result<MatchResult> {
    scan(text, pattern, k, method, config, false)
}

fn scan(
    text: &Word,
    pattern: &Word,
    k: u32,
    method: Method,
    config: &McConfig,
    prefilter: bool,
) -> Result<MatchResult> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let (text, pattern) = joint_alphabet(text, pattern);
    let n = text.len();
    let m = pattern.len();
    if m > n {
        return Ok(MatchResult {
            positions: Vec::new(),
        });
    }
    // at k = 0 every window is vacuously equivalent, letter counts or not
    let starts: Vec<usize> = if prefilter && k >= 1 {
        abelian_candidates(&text, &pattern)
    } else {
        (1..=n - m + 1).collect()
    };
    let positions: Vec<Option<usize>> = starts
        .into_par_iter()
        .map(|start| {
            let window = text.factor(start, start + m - 1).expect("window in range");
            let hit = match method {
                Method::Oracle => Ok(oracle_equivalent(&window, &pattern, k)),
                Method::Det => Ok(path_equivalent(&window, &pattern, k).is_equivalent()),
                Method::Mc => {
                    let per_window = McConfig {
                        seed: window_seed(config.seed, start),
                        ..config.clone()
                    };
                    mc_equivalent(&window, &pattern, k, &per_window).map(|o| o.equivalent)
                }
            };
            hit.map(|h| h.then_some(start))
        })
        .collect::<Result<_>>()?;
    let positions: Vec<usize> = positions.into_iter().flatten().collect();
    debug_assert!(positions.windows(2).all(|p| p[0] < p[1]));
    Ok(MatchResult { positions })
}

/// Start positions whose window has the pattern's letter counts, found by
/// sliding the counts one letter at a time.
fn abelian_candidates(text: &Word, pattern: &Word) -> Vec<usize> {
    let sigma = text.alphabet().size();
    let n = text.len();
    let m = pattern.len();
    // deficit per letter of the current window against the pattern, plus
    // how many letters are currently off
    let mut deficit = vec![0i64; sigma];
    for &d in pattern.digits() {
        deficit[d as usize] -= 1;
    }
    let mut off = deficit.iter().filter(|&&c| c != 0).count();
    let bump = |deficit: &mut [i64], off: &mut usize, letter: usize, delta: i64| {
        let was = deficit[letter];
        deficit[letter] += delta;
        match (was == 0, deficit[letter] == 0) {
            (true, false) => *off += 1,
            (false, true) => *off -= 1,
            _ => {}
        }
    };
    for &d in &text.digits()[..m] {
        bump(&mut deficit, &mut off, d as usize, 1);
    }
    let mut starts = Vec::new();
    for start in 1..=n - m + 1 {
        if off == 0 {
            starts.push(start);
        }
        if start + m <= n {
            bump(
                &mut deficit,
                &mut off,
                text.digits()[start - 1] as usize,
                -1,
            );
            bump(
                &mut deficit,
                &mut off,
                text.digits()[start + m - 1] as usize,
                1,
            );
        }
    }
    starts
}

/// Stream split for per-window seeds: position steps through the splitmix64
/// sequence anchored at the run's seed.
fn window_seed(seed: u64, position: usize) -> u64 {
    splitmix64(seed.wrapping_add((position as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

//! Exhaustive reference decider.
//!
//! Counts scattered-factor occurrences exactly and decides k-binomial
//! equivalence by comparing full coefficient tables. Everything here is
//! intentionally exponential in k and serves as ground truth for the
//! polynomial-time deciders; keep inputs small (n up to ~15, k up to ~5).

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{joint_alphabet, Word};

/// Arbitrary-precision nonnegative count. Binomial coefficients of words are
/// bounded by n^k, which overflows fixed-width integers already at moderate
/// sizes, so counts are big integers from the start.
pub type BigCount = BigUint;

/// The number of occurrences of `v` as a scattered factor of `u`, i.e. the
/// number of index sequences i_1 < ... < i_{|v|} with u[i_j] = v[j].
///
/// Both words must carry the same alphabet. The empty factor occurs exactly
/// once in any word.
pub fn binomial_coefficient(u: &Word, v: &Word) -> Result<BigCount> {
    if u.alphabet().as_ref() != v.alphabet().as_ref() {
        return Err(Error::AlphabetMismatch);
    }
    // counts[j] = occurrences of v[1..j] in the prefix of u scanned so far
    let mut counts = vec![BigUint::zero(); v.len() + 1];
    counts[0] = BigUint::one();
    for &a in u.digits() {
        for j in (1..=v.len()).rev() {
            if v.digits()[j - 1] == a {
                let (lo, hi) = counts.split_at_mut(j);
                hi[0] += &lo[j - 1];
            }
        }
    }
    Ok(counts.pop().expect("counts is nonempty"))
}

/// All nonzero binomial coefficients of a word for nonempty factors of length
/// at most k, keyed by the factor's digit sequence.
///
/// The table is sparse: only factors that actually occur appear, everything
/// else is an implicit zero. Two tables over the same alphabet represent equal
/// coefficient functions iff they are equal as maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTable {
    word: Word,
    order: u32,
    entries: BTreeMap<Vec<u32>, BigCount>,
}

impl BinomialTable {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The coefficient for the given factor digits; absent keys are zero.
    pub fn count(&self, factor: &[u32]) -> BigCount {
        self.entries
            .get(factor)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u32>, BigCount> {
        &self.entries
    }

    /// True if both tables describe the same coefficient function for factors
    /// of length at most `order`.
    pub fn same_counts(&self, other: &BinomialTable, order: u32) -> bool {
        let filter = |t: &BinomialTable| {
            t.entries
                .iter()
                .filter(|(v, _)| v.len() <= order as usize)
                .map(|(v, c)| (v.clone(), c.clone()))
                .collect::<BTreeMap<_, _>>()
        };
        filter(self) == filter(other)
    }

    /// Deterministic text form: one `factor<TAB>count` line per entry, sorted
    /// by (length, lexicographic).
    pub fn to_text(&self) -> String {
        let mut keys: Vec<&Vec<u32>> = self.entries.keys().collect();
        keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut out = String::new();
        for key in keys {
            let factor: String = key
                .iter()
                .map(|&d| self.word.alphabet().symbol(d as usize))
                .collect();
            out.push_str(&factor);
            out.push('\t');
            out.push_str(&self.entries[key].to_string());
            out.push('\n');
        }
        out
    }
}

/// Computes the table of all nonzero coefficients of `w` for nonempty factors
/// of length at most k.
///
/// Works by depth-first extension of occupancy vectors: for a factor v, the
/// occupancy at position i is the number of ways to place v with its last
/// letter at w[i]. Extending by a letter only ever visits factors that occur,
/// so the enumeration is proportional to the number of distinct scattered
/// factors rather than σ^k.
pub fn binomial_table(w: &Word, k: u32) -> BinomialTable {
    let n = w.len();
    let sigma = w.alphabet().size();
    let mut entries = BTreeMap::new();
    if k >= 1 && n >= 1 && sigma >= 1 {
        // occupancy[i] for i in 0..=n; index 0 is "before the word"
        let mut initial = vec![BigUint::zero(); n + 1];
        initial[0] = BigUint::one();
        let mut prefix = Vec::new();
        extend_table(w, k, &initial, &mut prefix, &mut entries);
    }
    BinomialTable {
        word: w.clone(),
        order: k,
        entries,
    }
}

fn extend_table(
    w: &Word,
    k: u32,
    occupancy: &[BigUint],
    prefix: &mut Vec<u32>,
    entries: &mut BTreeMap<Vec<u32>, BigCount>,
) {
    if prefix.len() == k as usize {
        return;
    }
    for a in 0..w.alphabet().size() as u32 {
        let mut next = vec![BigUint::zero(); occupancy.len()];
        let mut running = BigUint::zero();
        let mut total = BigUint::zero();
        for (i, &d) in w.digits().iter().enumerate() {
            running += &occupancy[i];
            if d == a {
                total += &running;
                next[i + 1] = running.clone();
            }
        }
        if total.is_zero() {
            continue;
        }
        prefix.push(a);
        entries.insert(prefix.clone(), total);
        extend_table(w, k, &next, prefix, entries);
        prefix.pop();
    }
}

/// Decides w1 ≡_k w2 by comparing the full coefficient tables.
///
/// Words of different lengths are never equivalent for k >= 1, since the
/// single-letter coefficients sum to the length; that case short-circuits
/// before any table is built. Words over different alphabets are first
/// re-expressed over the joint alphabet. For k = 0 every pair is trivially
/// equivalent.
pub fn oracle_equivalent(w1: &Word, w2: &Word, k: u32) -> bool {
    if k >= 1 && w1.len() != w2.len() {
        return false;
    }
    let (u1, u2) = joint_alphabet(w1, w2);
    binomial_table(&u1, k).entries == binomial_table(&u2, k).entries
}

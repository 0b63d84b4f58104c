//! Shared input generators for the benchmark targets.

use std::sync::Arc;

use kbinom::{random_word, Alphabet, Word};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn binary_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::new("ab".chars()).expect("two distinct symbols"))
}

/// A random binary word of length `n` and a shuffle of it. The pair is
/// abelian-equivalent, so none of the deciders can exit at the letter
/// counts — they all do their full amount of work.
pub fn shuffled_pair(n: usize, seed: u64) -> (Word, Word) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = binary_alphabet();
    let first = random_word(&alphabet, n, &mut rng);
    let mut digits = first.digits().to_vec();
    digits.shuffle(&mut rng);
    let second = Word::from_digits(&alphabet, digits);
    (first, second)
}

/// A single random binary word of length `n`.
pub fn one_word(n: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word(&binary_alphabet(), n, &mut rng)
}

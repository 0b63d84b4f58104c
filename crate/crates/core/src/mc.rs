//! Monte-Carlo fingerprint decider.
//!
//! The full table of binomial coefficients of w for factors of length at
//! most k is packed into one polynomial
//!
//! ```text
//! Q(x) = Σ over nonempty |v| ≤ k of (w choose v) · x^code(v)
//! ```
//!
//! where `code` maps factors injectively to exponents (see
//! [`exponent_code`]). Two words of length n are k-binomially equivalent iff
//! their Q polynomials are identical, so the decider samples a random prime
//! p of a few dozen bits and a random point x in F_p and compares the two
//! values Q(x) mod p. The polynomial is never expanded: a dynamic program
//! evaluates it at the point directly in O(nk²) field operations.
//!
//! The error is one-sided. Equivalent words always compare equal; for
//! inequivalent words the difference polynomial is nonzero, and a false
//! zero requires either a prime dividing every differing coefficient or a
//! point that happens to be a root mod p — together at most 1/n likely with
//! the default parameters.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::word::{joint_alphabet, Word};

/// Modular arithmetic over F_p for a probable prime p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    modulus: BigUint,
    bits: u32,
}

impl PrimeField {
    pub fn new(modulus: BigUint) -> PrimeField {
        assert!(modulus > BigUint::one(), "modulus must be at least 2");
        let bits = modulus.bits() as u32;
        PrimeField { modulus, bits }
    }

    /// Samples a random field: draw a prime via [`random_prime`].
    pub fn sample(bits: u32, rounds: u32, budget: u32, rng: &mut impl Rng) -> Result<PrimeField> {
        Ok(PrimeField::new(random_prime(bits, rounds, budget, rng)?))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a + b) % &self.modulus
    }

    pub fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let a = a % &self.modulus;
        let b = b % &self.modulus;
        if a >= b {
            a - b
        } else {
            a + &self.modulus - b
        }
    }

    pub fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.modulus
    }

    pub fn pow(&self, base: &BigUint, exponent: &BigUint) -> BigUint {
        base.modpow(exponent, &self.modulus)
    }

    /// Uniform element of [0, p).
    pub fn random_element(&self, rng: &mut impl Rng) -> BigUint {
        rng.gen_biguint_below(&self.modulus)
    }
}

/// Rounds of the Miller-Rabin probable-prime test. A prime always passes;
/// a composite survives a single round with probability at most 1/4, so the
/// chance of passing all rounds is at most 4^-rounds.
pub fn miller_rabin(m: &BigUint, rounds: u32, rng: &mut impl Rng) -> bool {
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    if *m < two {
        return false;
    }
    if *m == two || *m == three {
        return true;
    }
    if !m.bit(0) {
        return false;
    }
    let m_minus_1 = m - 1u32;
    let s = m_minus_1.trailing_zeros().expect("m > 1 is odd plus one");
    let d = &m_minus_1 >> s;
    'round: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &m_minus_1);
        let mut x = a.modpow(&d, m);
        if x.is_one() || x == m_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % m;
            if x == m_minus_1 {
                continue 'round;
            }
        }
        return false;
    }
    true
}

/// Draws uniformly random odd `bits`-bit numbers (top and bottom bit set)
/// until one passes `rounds` of Miller-Rabin, giving up after `budget`
/// candidates. By the prime number theorem a random t-bit odd number is
/// prime with probability on the order of 1/t, so a budget of a few t² is
/// ample and exhaustion is overwhelmingly unlikely.
pub fn random_prime(bits: u32, rounds: u32, budget: u32, rng: &mut impl Rng) -> Result<BigUint> {
    assert!(bits >= 2, "need at least 2 bits for an odd candidate");
    let top = BigUint::one() << (bits - 1);
    for _ in 0..budget {
        let middle = rng.gen_biguint(bits.saturating_sub(2) as u64) << 1;
        let candidate = &top | middle | BigUint::one();
        if miller_rabin(&candidate, rounds, rng) {
            return Ok(candidate);
        }
    }
    Err(Error::PrimeSamplingFailed { bits, budget })
}

/// The exponent reserved for a factor in Q: the value of the digit string
/// `1·v` read as a base-σ numeral, i.e. σ^|v| + Σ_j v[j]·σ^(|v|−j). The
/// leading 1 acts as a length sentinel, making the map injective across
/// lengths despite leading zero digits. Over a unary alphabet every power
/// of σ collapses, so the code degenerates to |v| + 1, which still
/// separates all distinct factors (there is only one per length).
pub fn exponent_code(v: &Word) -> BigUint {
    let sigma = v.alphabet().size();
    if sigma <= 1 {
        return BigUint::from(v.len() + 1);
    }
    let mut code = BigUint::one();
    for &d in v.digits() {
        code = code * sigma + d;
    }
    code
}

/// Evaluates Q at the point x in the given field, without expanding the
/// polynomial: row k' of the dynamic program scans the word right to left,
/// accumulating the contributions of all length-k' factors of each suffix;
/// each row costs O(nσ) field operations. Labels longer than the word have
/// empty rows and contribute nothing, so k may exceed |w|.
pub fn evaluate_q(w: &Word, k: u32, x: &BigUint, field: &PrimeField) -> BigUint {
    let n = w.len();
    let sigma = w.alphabet().size();
    let x = x % field.modulus();
    let mut total = BigUint::zero();
    if n == 0 {
        return total;
    }
    // row[i] = contribution of factors of length k' inside w[i+1 ..], each
    // weighted by x to its code minus the sentinel power σ^k'
    let mut prev: Vec<BigUint> = vec![BigUint::one(); n + 1];
    // y = x^(σ^(k'−1)), the weight base for digits of the k'-th letter
    let mut y = x.clone();
    // sentinel power x^(k'+1), used only over unary alphabets
    let mut unary_sentinel = field.mul(&x, &x);
    for _ in 1..=k {
        let mut digit_power = vec![BigUint::one()];
        for _ in 1..sigma {
            let next = field.mul(digit_power.last().expect("nonempty"), &y);
            digit_power.push(next);
        }
        let mut cur = vec![BigUint::zero(); n + 1];
        for i in (0..n).rev() {
            let weight = &digit_power[w.digits()[i] as usize];
            cur[i] = field.add(&cur[i + 1], &field.mul(&prev[i + 1], weight));
        }
        let sentinel = if sigma == 1 {
            let s = unary_sentinel.clone();
            unary_sentinel = field.mul(&unary_sentinel, &x);
            s
        } else {
            y = field.pow(&y, &BigUint::from(sigma));
            y.clone()
        };
        total = field.add(&total, &field.mul(&sentinel, &cur[0]));
        if cur.iter().all(Zero::is_zero) {
            break;
        }
        prev = cur;
    }
    total
}

/// Tuning knobs for [`mc_equivalent`]. All randomness is derived from the
/// seed, so a configuration pins the entire run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McConfig {
    /// Bit length of the sampled primes.
    pub bits: u32,
    /// Miller-Rabin rounds per candidate.
    pub miller_rabin_rounds: u32,
    /// Candidates drawn before the prime sampler reports failure.
    pub candidate_budget: u32,
    /// Independent (prime, point) trials; the first nonzero difference
    /// decides. More trials drive the false-accept rate from 1/n to n^-r.
    pub trials: u32,
    pub seed: u64,
}

impl McConfig {
    /// Production defaults for a pair of words: primes of
    /// ⌈(k+1)·⌈log₂ σ⌉ + 1 + 2·log₂ n⌉ bits (at least 4), 30 rounds of
    /// Miller-Rabin, a candidate budget of 4t², one trial.
    pub fn for_words(w1: &Word, w2: &Word, k: u32, seed: u64) -> McConfig {
        let n = w1.len().max(w2.len());
        let sigma = w1.alphabet().union(w2.alphabet()).size();
        let bits = McConfig::default_bits(n, sigma, k);
        McConfig {
            bits,
            miller_rabin_rounds: 30,
            candidate_budget: 4 * bits * bits,
            trials: 1,
            seed,
        }
    }

    /// Leaner parameters for measuring the bare algorithm: a single
    /// Miller-Rabin round per candidate and a budget of t² candidates.
    pub fn paper_faithful(w1: &Word, w2: &Word, k: u32, seed: u64) -> McConfig {
        let base = McConfig::for_words(w1, w2, k, seed);
        McConfig {
            miller_rabin_rounds: 1,
            candidate_budget: base.bits * base.bits,
            ..base
        }
    }

    /// The default prime bit length for words of length n over σ symbols.
    /// Large enough that p strictly exceeds Q's degree (< 2σ^(k+1)) and
    /// that a random point is a root with probability well below 1/n².
    pub fn default_bits(n: usize, sigma: usize, k: u32) -> u32 {
        let log_sigma = if sigma <= 1 {
            0
        } else {
            usize::BITS - (sigma - 1).leading_zeros()
        };
        let fixed = (k + 1) * log_sigma + 1;
        let scale = if n >= 2 { 2.0 * (n as f64).log2() } else { 0.0 };
        let bits = (fixed as f64 + scale).ceil() as u32;
        bits.max(4)
    }
}

/// One (prime, point) evaluation. `difference` is Q(w1)(x) − Q(w2)(x) in
/// F_p; any nonzero value certifies inequivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McTrial {
    pub prime: BigUint,
    pub point: BigUint,
    pub difference: BigUint,
}

/// Verdict of the randomized decider, with the evidence that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McOutcome {
    /// True means "equivalent with high probability": genuinely equivalent
    /// words always land here, and inequivalent ones escape detection in a
    /// single trial with probability at most about 1/n. False is always
    /// correct.
    pub equivalent: bool,
    pub trials: Vec<McTrial>,
}

/// Decides k-binomial equivalence probabilistically. Words over different
/// alphabets are first re-expressed over the joint alphabet; unequal
/// lengths short-circuit to inequivalent (letter counts already differ);
/// k = 0 is vacuously equivalent. Each trial derives its own PRNG stream
/// from (seed, trial index), so trial outcomes are independent of
/// evaluation order. At least one trial always runs.
pub fn mc_equivalent(w1: &Word, w2: &Word, k: u32, config: &McConfig) -> Result<McOutcome> {
    let (u1, u2) = joint_alphabet(w1, w2);
    if k == 0 {
        return Ok(McOutcome {
            equivalent: true,
            trials: Vec::new(),
        });
    }
    if u1.len() != u2.len() {
        return Ok(McOutcome {
            equivalent: false,
            trials: Vec::new(),
        });
    }
    let mut trials = Vec::new();
    for index in 0..config.trials.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(index as u64);
        let field = PrimeField::sample(
            config.bits,
            config.miller_rabin_rounds,
            config.candidate_budget,
            &mut rng,
        )?;
        let point = field.random_element(&mut rng);
        let q1 = evaluate_q(&u1, k, &point, &field);
        let q2 = evaluate_q(&u2, k, &point, &field);
        let difference = field.sub(&q1, &q2);
        let split = !difference.is_zero();
        trials.push(McTrial {
            prime: field.modulus().clone(),
            point,
            difference,
        });
        if split {
            return Ok(McOutcome {
                equivalent: false,
                trials,
            });
        }
    }
    Ok(McOutcome {
        equivalent: true,
        trials,
    })
}

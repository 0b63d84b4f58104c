//! Alphabets and words.
//!
//! A [`Word`] is a finite sequence of symbols over a fixed, totally ordered
//! [`Alphabet`]. Internally every letter is stored as its index (its *digit*)
//! in the alphabet, so lexicographic comparisons and base-σ encodings fall out
//! of the representation. Positions follow the 1-based convention `w[1..n]`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// A finite, nonempty-or-empty set of symbols with a fixed total order.
///
/// Symbols are kept sorted, so the digit of a symbol is its rank. The order is
/// what the deterministic decider uses for lexicographic exploration and what
/// the fingerprint decider uses for base-σ exponent encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from a set of symbols, sorting them.
    /// Duplicates are rejected.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let mut symbols: Vec<char> = symbols.into_iter().collect();
        symbols.sort_unstable();
        for pair in symbols.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateSymbol { symbol: pair[0] });
            }
        }
        Ok(Self { symbols })
    }

    /// The alphabet of all distinct characters occurring in `text`, sorted.
    pub fn from_text(text: &str) -> Self {
        let mut symbols: Vec<char> = text.chars().collect();
        symbols.sort_unstable();
        symbols.dedup();
        Self { symbols }
    }

    /// Number of symbols σ.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Index of `symbol` in the alphabet order, if present.
    pub fn digit(&self, symbol: char) -> Option<usize> {
        self.symbols.binary_search(&symbol).ok()
    }

    /// Symbol with the given digit. Panics if out of range.
    pub fn symbol(&self, digit: usize) -> char {
        self.symbols[digit]
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Sorted union of two alphabets.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols: Vec<char> = self
            .symbols
            .iter()
            .chain(other.symbols.iter())
            .copied()
            .collect();
        symbols.sort_unstable();
        symbols.dedup();
        Alphabet { symbols }
    }

    /// True if every symbol of `other` is also a symbol of `self`.
    pub fn contains_all(&self, other: &Alphabet) -> bool {
        other.symbols.iter().all(|&c| self.digit(c).is_some())
    }
}

fn check_symbol(symbol: char, position: usize) -> Result<()> {
    if symbol.is_whitespace() || symbol.is_control() {
        return Err(Error::UnsupportedCharacter { symbol, position });
    }
    Ok(())
}

/// A word over an [`Alphabet`], stored as digits.
///
/// The alphabet is shared behind an [`Arc`]: words are immutable after
/// construction and may be cloned and moved across threads freely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    digits: Vec<u32>,
}

impl Word {
    /// Parses a word, taking the alphabet to be the distinct characters of
    /// `text` in sorted order.
    pub fn parse(text: &str) -> Result<Self> {
        for (idx, symbol) in text.chars().enumerate() {
            check_symbol(symbol, idx + 1)?;
        }
        let alphabet = Arc::new(Alphabet::from_text(text));
        Self::parse_in(text, &alphabet)
    }

    /// Parses a word over a caller-supplied alphabet. Characters outside the
    /// alphabet are an error naming the offending symbol and its 1-based
    /// position.
    pub fn parse_in(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let mut digits = Vec::with_capacity(text.len());
        for (idx, symbol) in text.chars().enumerate() {
            let position = idx + 1;
            check_symbol(symbol, position)?;
            match alphabet.digit(symbol) {
                Some(d) => digits.push(d as u32),
                None => return Err(Error::SymbolNotInAlphabet { symbol, position }),
            }
        }
        Ok(Self {
            alphabet: Arc::clone(alphabet),
            digits,
        })
    }

    /// Builds a word directly from digits. Panics if a digit is out of range
    /// for the alphabet; intended for construction sites that already hold
    /// valid digits (witness reporting, random sampling).
    pub fn from_digits(alphabet: &Arc<Alphabet>, digits: Vec<u32>) -> Self {
        assert!(
            digits.iter().all(|&d| (d as usize) < alphabet.size()),
            "digit out of range for alphabet"
        );
        Self {
            alphabet: Arc::clone(alphabet),
            digits,
        }
    }

    /// Length n of the word.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// The digit sequence (0-based slice; digit `digits()[i]` is letter
    /// `w[i+1]` in the 1-based convention).
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// The factor `w[i..j]`, 1-based, with 1 <= i <= j <= n.
    pub fn factor(&self, start: usize, end: usize) -> Result<Word> {
        if start < 1 || end < start || end > self.len() {
            return Err(Error::RangeOutOfBounds {
                start,
                end,
                len: self.len(),
            });
        }
        Ok(Word {
            alphabet: Arc::clone(&self.alphabet),
            digits: self.digits[start - 1..end].to_vec(),
        })
    }

    /// Re-expresses the word over a superset alphabet.
    pub fn embed(&self, alphabet: &Arc<Alphabet>) -> Result<Word> {
        if self.alphabet.as_ref() == alphabet.as_ref() {
            return Ok(Word {
                alphabet: Arc::clone(alphabet),
                digits: self.digits.clone(),
            });
        }
        let mut digits = Vec::with_capacity(self.digits.len());
        for (idx, &d) in self.digits.iter().enumerate() {
            let symbol = self.alphabet.symbol(d as usize);
            match alphabet.digit(symbol) {
                Some(nd) => digits.push(nd as u32),
                None => {
                    return Err(Error::SymbolNotInAlphabet {
                        symbol,
                        position: idx + 1,
                    })
                }
            }
        }
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            digits,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", self.alphabet.symbol(d as usize))?;
        }
        Ok(())
    }
}

/// Re-expresses two words over the sorted union of their alphabets.
///
/// Always succeeds; the union of two alphabets exists unconditionally, and
/// every symbol of each word is in it.
pub fn joint_alphabet(w1: &Word, w2: &Word) -> (Word, Word) {
    if w1.alphabet.as_ref() == w2.alphabet.as_ref() {
        return (w1.clone(), w2.clone());
    }
    let joint = Arc::new(w1.alphabet.union(&w2.alphabet));
    let r1 = w1.embed(&joint).expect("union contains all symbols of w1");
    let r2 = w2.embed(&joint).expect("union contains all symbols of w2");
    (r1, r2)
}

/// A uniformly random word of the given length.
pub fn random_word<R: Rng + ?Sized>(alphabet: &Arc<Alphabet>, len: usize, rng: &mut R) -> Word {
    assert!(
        !alphabet.is_empty() || len == 0,
        "empty alphabet admits only the empty word"
    );
    let digits = (0..len)
        .map(|_| rng.gen_range(0..alphabet.size()) as u32)
        .collect();
    Word::from_digits(alphabet, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_infers_sorted_alphabet() {
        let w = Word::parse("bbaa").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.alphabet().symbols(), &['a', 'b']);
        assert_eq!(w.digits(), &[1, 1, 0, 0]);
    }

    #[test]
    fn parse_binary_example() {
        let w = Word::parse("0010").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.alphabet().symbols(), &['0', '1']);
    }

    #[test]
    fn parse_rejects_symbol_outside_supplied_alphabet() {
        let abc = Arc::new(Alphabet::new("abc".chars()).unwrap());
        let err = Word::parse_in("ab$c", &abc).unwrap_err();
        assert_eq!(
            err,
            Error::SymbolNotInAlphabet {
                symbol: '$',
                position: 3
            }
        );
    }

    #[test]
    fn parse_rejects_whitespace_and_controls() {
        assert!(matches!(
            Word::parse("a b"),
            Err(Error::UnsupportedCharacter {
                symbol: ' ',
                position: 2
            })
        ));
        assert!(Word::parse("a\tb").is_err());
        assert!(Word::parse("a\u{7}b").is_err());
    }

    #[test]
    fn empty_word_is_valid() {
        let w = Word::parse("").unwrap();
        assert!(w.is_empty());
        assert_eq!(w.alphabet().size(), 0);
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert_eq!(
            Alphabet::new("aba".chars()).unwrap_err(),
            Error::DuplicateSymbol { symbol: 'a' }
        );
    }

    #[test]
    fn joint_alphabet_is_sorted_union() {
        let w1 = Word::parse("ab").unwrap();
        let w2 = Word::parse("bc").unwrap();
        let (r1, r2) = joint_alphabet(&w1, &w2);
        assert_eq!(r1.alphabet().symbols(), &['a', 'b', 'c']);
        assert_eq!(r1.alphabet(), r2.alphabet());
        assert_eq!(r1.to_string(), "ab");
        assert_eq!(r2.to_string(), "bc");
    }

    #[test]
    fn joint_alphabet_with_empty_word() {
        let empty = Word::parse("").unwrap();
        let w = Word::parse("ab").unwrap();
        let (r1, r2) = joint_alphabet(&empty, &w);
        assert_eq!(r2.alphabet().symbols(), &['a', 'b']);
        assert!(r1.is_empty());
        assert_eq!(r1.alphabet(), r2.alphabet());
    }

    #[test]
    fn factor_matches_one_based_convention() {
        let w = Word::parse("11010").unwrap();
        assert_eq!(w.factor(1, 3).unwrap().to_string(), "110");
        let w = Word::parse("bbaa").unwrap();
        assert_eq!(w.factor(2, 2).unwrap().to_string(), "b");
        assert!(matches!(
            w.factor(3, 2),
            Err(Error::RangeOutOfBounds { .. })
        ));
        assert!(w.factor(0, 1).is_err());
        assert!(w.factor(2, 5).is_err());
    }

    fn word_text() -> impl Strategy<Value = String> {
        proptest::string::string_regex("[a-d0-3]{0,24}").unwrap()
    }

    proptest! {
        #[test]
        fn parse_then_display_roundtrips(text in word_text()) {
            let w = Word::parse(&text).unwrap();
            prop_assert_eq!(w.to_string(), text);
        }

        #[test]
        fn joint_alphabet_commutes_and_is_idempotent(a in word_text(), b in word_text()) {
            let wa = Word::parse(&a).unwrap();
            let wb = Word::parse(&b).unwrap();
            let (ra, rb) = joint_alphabet(&wa, &wb);
            let (sb, sa) = joint_alphabet(&wb, &wa);
            prop_assert_eq!(ra.alphabet(), sb.alphabet());
            prop_assert_eq!(&ra, &sa);
            prop_assert_eq!(&rb, &sb);
            let (ta, _) = joint_alphabet(&ra, &rb);
            prop_assert_eq!(ta.alphabet(), ra.alphabet());
        }

        #[test]
        fn full_factor_is_identity(text in word_text()) {
            let w = Word::parse(&text).unwrap();
            if !w.is_empty() {
                prop_assert_eq!(w.factor(1, w.len()).unwrap(), w);
            }
        }
    }
}

use thiserror::Error;

/// Errors reported by the word parsers and deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A symbol in the input is not part of the supplied alphabet.
    /// Positions are 1-based.
    #[error("symbol '{symbol}' at position {position} is not in the alphabet")]
    SymbolNotInAlphabet { symbol: char, position: usize },

    /// Words must consist of printable, non-whitespace characters.
    #[error("unsupported character '{symbol}' at position {position}: words must be printable and whitespace-free")]
    UnsupportedCharacter { symbol: char, position: usize },

    /// An alphabet was built from a sequence containing a repeated symbol.
    #[error("duplicate symbol '{symbol}' in alphabet")]
    DuplicateSymbol { symbol: char },

    /// A factor range w[i..j] with 1 <= i <= j <= |w| was expected.
    #[error("factor range [{start}, {end}] is invalid for a word of length {len}")]
    RangeOutOfBounds {
        start: usize,
        end: usize,
        len: usize,
    },

    /// Two words passed to a coefficient computation carry different alphabets.
    #[error("words use different alphabets; re-express them over a joint alphabet first")]
    AlphabetMismatch,

    /// Pattern matching requires a nonempty pattern.
    #[error("pattern must be nonempty")]
    EmptyPattern,

    /// The prime sampler ran out of candidates before finding a probable prime.
    #[error(
        "no {bits}-bit probable prime found within {budget} candidates; retry with a fresh seed"
    )]
    PrimeSamplingFailed { bits: u32, budget: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by parsing, construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet size {0} is not supported (expected 2..=36)")]
    InvalidAlphabet(usize),

    #[error("line {line}, column {column}: invalid character {ch:?}")]
    InvalidCharacter {
        line: usize,
        column: usize,
        ch: char,
    },

    #[error("line {line}, column {column}: letter {ch:?} is outside the {size}-letter alphabet")]
    OutOfAlphabet {
        line: usize,
        column: usize,
        ch: char,
        size: usize,
    },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("code word at position {0} is empty")]
    EmptyCodeWord(usize),

    #[error("a code needs at least one word")]
    EmptyCode,

    #[error("code words at positions {0} and {1} are equal")]
    DuplicateWords(usize, usize),

    #[error("symbol {symbol} is outside the {size}-letter alphabet")]
    SymbolOutOfRange { symbol: u8, size: usize },

    #[error("the code is not uniquely decodable, so factorizations are not unique")]
    NotUniquelyDecodable,

    #[error("lengths are infeasible: Kraft sum {0} exceeds 1")]
    Infeasible(BigRational),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("construction failed at length {length}: {message}")]
    Construction { length: usize, message: String },

    #[error("universe of {total} codes exceeds the enumeration cap {cap}")]
    UniverseTooLarge { total: String, cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Alphabets, words, codes and length profiles.
//!
//! Letters are symbol indices `0..n`. In text they are written with the glyphs
//! `0`–`9` followed by `a`–`z`, so alphabets hold at most 36 letters.
//!
//! A [`Code`] is an ordered sequence of words: `(0, 1)` and `(1, 0)` are two
//! different codes. Words are ordered lexicographically by symbol index, which
//! is the tie-breaker every canonical construction in this crate relies on.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

const GLYPHS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// Largest alphabet that has a glyph for every letter.
pub const MAX_ALPHABET: usize = GLYPHS.len();

/// Glyph of a letter. Panics if `symbol >= 36`.
pub fn glyph(symbol: u8) -> char {
    GLYPHS[symbol as usize] as char
}

/// Letter denoted by a glyph, if `ch` is one.
pub fn symbol_of(ch: char) -> Option<u8> {
    match ch {
        '0'..='9' => Some(ch as u8 - b'0'),
        'a'..='z' => Some(ch as u8 - b'a' + 10),
        _ => None,
    }
}

/// An alphabet of `n` letters, `2 <= n <= 36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if (2..=MAX_ALPHABET).contains(&size) {
            Ok(Alphabet(size))
        } else {
            Err(Error::InvalidAlphabet(size))
        }
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn contains(self, symbol: u8) -> bool {
        (symbol as usize) < self.0
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word, possibly empty.
///
/// The derived ordering is lexicographic by symbol index with a proper prefix
/// sorting before its extensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `symbol` repeated `len` times.
    pub fn repeat(symbol: u8, len: usize) -> Self {
        Word(vec![symbol; len])
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `self` is an initial segment of `other` (equality included).
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_prefix_of(other)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// The remainder of `self` after `prefix`, if `prefix` is a prefix of it.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.symbols())
            .map(|s| Word(s.to_vec()))
    }

    /// Suffix starting at letter `start`.
    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn push_word(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Shortest word `r` with `self = r^k` for some `k >= 1`.
    pub fn primitive_root(&self) -> Word {
        let n = self.len();
        (1..=n)
            .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| self.0[i] == self.0[i - p]))
            .map(|p| self.prefix(p))
            .unwrap_or_default()
    }

    /// All non-empty proper suffixes.
    pub fn proper_suffixes(&self) -> impl Iterator<Item = Word> + '_ {
        (1..self.len()).map(move |i| self.suffix_from(i))
    }

    fn check(&self, alphabet: Alphabet) -> Result<()> {
        match self.0.iter().find(|&&s| !alphabet.contains(s)) {
            Some(&symbol) => Err(Error::SymbolOutOfRange {
                symbol,
                size: alphabet.size(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &s in &self.0 {
            write!(f, "{}", glyph(s))?;
        }
        Ok(())
    }
}

impl From<Vec<u8>> for Word {
    fn from(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }
}

fn parse_word_at(text: &str, alphabet: Alphabet, line: usize) -> Result<Word> {
    text.chars()
        .enumerate()
        .map(|(i, ch)| {
            let column = i + 1;
            let symbol = symbol_of(ch).ok_or(Error::InvalidCharacter { line, column, ch })?;
            if alphabet.contains(symbol) {
                Ok(symbol)
            } else {
                Err(Error::OutOfAlphabet {
                    line,
                    column,
                    ch,
                    size: alphabet.size(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

/// Parse a word written in glyphs. The empty string is the empty word.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word> {
    parse_word_at(text, alphabet, 1)
}

pub fn reverse_word(w: &Word) -> Word {
    w.reversed()
}

pub fn is_prefix(u: &Word, v: &Word) -> bool {
    u.is_prefix_of(v)
}

pub fn common_prefix_length(u: &Word, v: &Word) -> usize {
    u.common_prefix_len(v)
}

/// A finite sequence of non-empty words over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl Code {
    pub fn new(alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::EmptyCode);
        }
        for (i, w) in words.iter().enumerate() {
            if w.is_empty() {
                return Err(Error::EmptyCodeWord(i));
            }
            w.check(alphabet)?;
        }
        Ok(Code { alphabet, words })
    }

    /// Build a code from glyph strings, e.g. `Code::from_glyphs(2, &["10", "100"])`.
    pub fn from_glyphs(alphabet_size: usize, words: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(alphabet_size)?;
        let words = words
            .iter()
            .enumerate()
            .map(|(i, w)| parse_word_at(w, alphabet, i + 1))
            .collect::<Result<Vec<_>>>()?;
        Code::new(alphabet, words)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.words.iter().map(Word::len).collect()
    }

    pub fn max_word_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// The first pair of positions `i < j` holding equal words.
    pub fn first_duplicate(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<&Word, usize> = HashMap::with_capacity(self.words.len());
        for (j, w) in self.words.iter().enumerate() {
            if let Some(&i) = seen.get(w) {
                return Some((i, j));
            }
            seen.insert(w, j);
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.first_duplicate().is_none()
    }

    pub fn reversed(&self) -> Code {
        Code {
            alphabet: self.alphabet,
            words: self.words.iter().map(Word::reversed).collect(),
        }
    }

    pub fn length_profile(&self) -> LengthProfile {
        LengthProfile::from_lengths(&self.lengths()).expect("code words are non-empty")
    }

    /// Concatenation of the words at `indices`.
    pub fn concat(&self, indices: &[usize]) -> Word {
        let mut out = Word::empty();
        for &i in indices {
            out.push_word(&self.words[i]);
        }
        out
    }

    /// Reorder the words so that the code has word lengths `lengths` in order.
    ///
    /// Words of equal length keep their relative order, so a code listed by
    /// ascending length maps onto the positions of each length left to right.
    pub fn arrange_to(&self, lengths: &[usize]) -> Result<Code> {
        let mut pools: HashMap<usize, std::collections::VecDeque<&Word>> = HashMap::new();
        for w in &self.words {
            pools.entry(w.len()).or_default().push_back(w);
        }
        let mismatch =
            || Error::Argument(format!("lengths {lengths:?} do not match the code {self}"));
        if lengths.len() != self.words.len() {
            return Err(mismatch());
        }
        let words = lengths
            .iter()
            .map(|len| {
                pools
                    .get_mut(len)
                    .and_then(|pool| pool.pop_front())
                    .cloned()
                    .ok_or_else(mismatch)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Code {
            alphabet: self.alphabet,
            words,
        })
    }

    /// Words as glyph strings joined by `sep`.
    pub fn join(&self, sep: &str) -> String {
        self.words
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parse the code file format: a header line `alphabet <n>` followed by one
    /// code word per line. `#` starts a comment; blank lines are skipped.
    pub fn parse_file(text: &str) -> Result<Code> {
        let mut alphabet = None;
        let mut words = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            match alphabet {
                None => {
                    let mut parts = content.split_whitespace();
                    let size = match (parts.next(), parts.next(), parts.next()) {
                        (Some("alphabet"), Some(n), None) => {
                            n.parse::<usize>().map_err(|_| Error::Syntax {
                                line,
                                message: format!("alphabet size {n:?} is not a number"),
                            })?
                        }
                        _ => {
                            return Err(Error::Syntax {
                                line,
                                message: "expected header `alphabet <n>`".into(),
                            })
                        }
                    };
                    alphabet = Some(Alphabet::new(size)?);
                }
                Some(alphabet) => {
                    let offset = raw.len() - raw.trim_start().len();
                    let word = parse_word_at(content, alphabet, line).map_err(|e| match e {
                        Error::InvalidCharacter { line, column, ch } => Error::InvalidCharacter {
                            line,
                            column: column + offset,
                            ch,
                        },
                        Error::OutOfAlphabet {
                            line,
                            column,
                            ch,
                            size,
                        } => Error::OutOfAlphabet {
                            line,
                            column: column + offset,
                            ch,
                            size,
                        },
                        e => e,
                    })?;
                    words.push(word);
                }
            }
        }
        let alphabet = alphabet.ok_or(Error::Syntax {
            line: 1,
            message: "missing header `alphabet <n>`".into(),
        })?;
        Code::new(alphabet, words)
    }

    /// Canonical file text: header, then one word per line, newline-terminated.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("alphabet {}\n", self.alphabet);
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.join(","))
    }
}

pub fn reverse_code(c: &Code) -> Code {
    c.reversed()
}

pub fn length_profile(c: &Code) -> LengthProfile {
    c.length_profile()
}

/// Distinct word lengths `ν_1 < … < ν_l` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LengthProfile {
    values: Vec<usize>,
    multiplicities: Vec<usize>,
}

impl LengthProfile {
    /// Profile of a length sequence. Order of `lengths` is irrelevant.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::Argument("length sequence is empty".into()));
        }
        if lengths.contains(&0) {
            return Err(Error::Argument("code word lengths must be positive".into()));
        }
        let mut sorted = lengths.to_vec();
        sorted.sort_unstable();
        let mut values: Vec<usize> = Vec::new();
        let mut multiplicities: Vec<usize> = Vec::new();
        for len in sorted {
            if values.last() == Some(&len) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                values.push(len);
                multiplicities.push(1);
            }
        }
        Ok(LengthProfile {
            values,
            multiplicities,
        })
    }

    pub fn new(values: Vec<usize>, multiplicities: Vec<usize>) -> Result<Self> {
        if values.is_empty() || values.len() != multiplicities.len() {
            return Err(Error::Argument(
                "values and multiplicities must be non-empty and aligned".into(),
            ));
        }
        if values[0] == 0 || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument(
                "values must be positive and strictly increasing".into(),
            ));
        }
        if multiplicities.contains(&0) {
            return Err(Error::Argument("multiplicities must be positive".into()));
        }
        Ok(LengthProfile {
            values,
            multiplicities,
        })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of distinct values `l`.
    pub fn distinct(&self) -> usize {
        self.values.len()
    }

    /// Total number of words `m`.
    pub fn total(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn index_of(&self, value: usize) -> Option<usize> {
        self.values.binary_search(&value).ok()
    }

    /// Multiplicity of `value`, zero if it is not a value of the profile.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.index_of(value).map_or(0, |i| self.multiplicities[i])
    }

    pub fn is_constant(&self) -> bool {
        self.values.len() == 1
    }

    pub fn max_len(&self) -> usize {
        *self.values.last().unwrap()
    }

    /// The length sequence sorted ascending.
    pub fn lengths(&self) -> Vec<usize> {
        self.values
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&v, &r)| std::iter::repeat_n(v, r))
            .collect()
    }
}

impl fmt::Display for LengthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths().iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

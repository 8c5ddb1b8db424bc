//! Letters, alphabets and words.

use std::fmt;

/// A single edge label. Ids `0..sigma` are the working alphabet; id `sigma`
/// is reserved for the suffix-tree sentinel and never appears in user input.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word over an alphabet: a sequence of letters.
pub type Word = Vec<Letter>;

/// An integer alphabet of size `sigma`, optionally carrying the ASCII symbols
/// it was inferred from (for round-tripping `--ascii` words).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    sigma: u32,
    symbols: Option<Vec<u8>>,
}

impl Alphabet {
    pub fn new(sigma: u32) -> Alphabet {
        assert!(sigma >= 1, "alphabet must have at least one letter");
        Alphabet { sigma, symbols: None }
    }

    /// Infer an alphabet from the distinct bytes of an ASCII string; letter
    /// ids follow byte order.
    pub fn from_ascii(text: &str) -> (Alphabet, Word) {
        let mut symbols: Vec<u8> = text.bytes().collect();
        symbols.sort_unstable();
        symbols.dedup();
        assert!(!symbols.is_empty(), "empty alphabet");
        let word = text
            .bytes()
            .map(|b| Letter(symbols.binary_search(&b).unwrap() as u32))
            .collect();
        (
            Alphabet { sigma: symbols.len() as u32, symbols: Some(symbols) },
            word,
        )
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// The reserved sentinel letter (id `sigma`).
    pub fn sentinel(&self) -> Letter {
        Letter(self.sigma)
    }

    pub fn contains(&self, l: Letter) -> bool {
        l.0 < self.sigma
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.sigma).map(Letter)
    }

    /// Map a letter back to its ASCII symbol, when this alphabet was inferred
    /// from text.
    pub fn symbol(&self, l: Letter) -> Option<char> {
        self.symbols
            .as_ref()
            .and_then(|s| s.get(l.0 as usize))
            .map(|&b| b as char)
    }

    pub fn has_symbols(&self) -> bool {
        self.symbols.is_some()
    }
}

/// Render a word as space-separated integer letter ids.
pub fn format_word(w: &[Letter]) -> String {
    let parts: Vec<String> = w.iter().map(|l| l.0.to_string()).collect();
    parts.join(" ")
}

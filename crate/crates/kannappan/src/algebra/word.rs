//! Free-semigroup words over a finite alphabet.

use crate::error::{Error, Result};

/// Ordered list of distinct ASCII generator symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    symbols: Vec<u8>,
}

impl Alphabet {
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Domain("alphabet must be nonempty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::Domain(format!(
                    "alphabet symbols must be distinct, `{}` repeats",
                    *s as char
                )));
            }
        }
        Ok(Alphabet {
            symbols: symbols.to_vec(),
        })
    }

    /// The rank-two alphabet {a, b} of the instability construction.
    pub fn ab() -> Self {
        Alphabet {
            symbols: vec![b'a', b'b'],
        }
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.symbols.contains(&symbol)
    }
}

/// A word, stored as its ASCII letter sequence.  Equality is letter by
/// letter; whether the empty word is admitted is a property of the carrier,
/// not of the value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn from_str_unchecked(s: &str) -> Self {
        Word {
            letters: s.as_bytes().to_vec(),
        }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// n-fold repetition, materialized.  Guarded so that dyadic iterations
    /// cannot silently allocate gigabytes; summarized power counting lives
    /// in the pattern-counter instead.
    pub fn repeat(&self, n: u64) -> Result<Word> {
        const MAX_LEN: u64 = 1 << 26;
        let total = (self.len() as u64).saturating_mul(n);
        if total > MAX_LEN {
            return Err(Error::TooLarge(format!(
                "|x|·n = {}·{} exceeds {} letters",
                self.len(),
                n,
                MAX_LEN
            )));
        }
        let mut letters = Vec::with_capacity(total as usize);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Ok(Word { letters })
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        for &l in &self.letters {
            if !alphabet.contains(l) {
                return Err(Error::Domain(format!(
                    "letter `{}` outside alphabet",
                    l as char
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", String::from_utf8_lossy(&self.letters))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_is_juxtaposition() {
        let ab = Word::from_str_unchecked("ab");
        let ba = Word::from_str_unchecked("ba");
        assert_eq!(ab.concat(&ba), Word::from_str_unchecked("abba"));
    }

    #[test]
    fn repeat_matches_concat() {
        let w = Word::from_str_unchecked("ab");
        assert_eq!(w.repeat(3).unwrap(), Word::from_str_unchecked("ababab"));
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(Alphabet::new(b"aba").is_err());
        assert!(Alphabet::new(b"").is_err());
    }

    #[test]
    fn repeat_guard_trips() {
        let w = Word::from_str_unchecked("abcd");
        assert!(w.repeat(1 << 60).is_err());
    }
}

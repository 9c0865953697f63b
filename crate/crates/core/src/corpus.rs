//! Five-letter word lists.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use crate::error::CorpusError;

const BUILTIN: &str = include_str!("../data/words.txt");

/// An uppercase five-letter word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word([u8; 5]);

impl Word {
    /// Case-insensitive; `None` unless exactly five ASCII letters.
    pub fn parse(text: &str) -> Option<Word> {
        let bytes = text.as_bytes();
        if bytes.len() != 5 || !bytes.iter().all(u8::is_ascii_alphabetic) {
            return None;
        }
        let mut out = [0u8; 5];
        for (o, b) in out.iter_mut().zip(bytes) {
            *o = b.to_ascii_uppercase();
        }
        Some(Word(out))
    }

    pub fn from_bytes(bytes: [u8; 5]) -> Option<Word> {
        std::str::from_utf8(&bytes).ok().and_then(Word::parse)
    }

    pub fn letters(&self) -> &[u8; 5] {
        &self.0
    }

    pub fn letter(&self, pos: usize) -> u8 {
        self.0[pos]
    }

    pub fn contains(&self, letter: u8) -> bool {
        self.0.contains(&letter)
    }

    /// The word with its 2nd and 4th letters exchanged.
    pub fn even_swap(&self) -> Word {
        let mut w = self.0;
        w.swap(1, 3);
        Word(w)
    }

    pub fn as_str(&self) -> &str {
        // ASCII by construction.
        std::str::from_utf8(&self.0).expect("ascii word")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordList {
    words: BTreeSet<Word>,
    source_name: String,
}

impl WordList {
    pub fn new(source_name: impl Into<String>, words: impl IntoIterator<Item = Word>) -> Self {
        WordList {
            words: words.into_iter().collect(),
            source_name: source_name.into(),
        }
    }

    /// Parses one word per line; blank lines and `#` comments are skipped.
    pub fn parse(source_name: &str, text: &str) -> Result<Self, CorpusError> {
        let mut words = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let word = Word::parse(line).ok_or_else(|| CorpusError::MalformedWord {
                source_name: source_name.to_string(),
                line: i + 1,
                word: line.to_string(),
            })?;
            words.insert(word);
        }
        Ok(WordList {
            words,
            source_name: source_name.to_string(),
        })
    }

    /// Convenience for tests and fixtures; panics on malformed words.
    pub fn from_strs(source_name: &str, words: &[&str]) -> Self {
        WordList::new(
            source_name,
            words
                .iter()
                .map(|w| Word::parse(w).unwrap_or_else(|| panic!("bad word {w:?}"))),
        )
    }

    /// The bundled list of common English words.
    pub fn builtin() -> Self {
        WordList::parse("builtin", BUILTIN).expect("bundled list is well formed")
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.contains(word)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    /// The list without its swappable words.
    pub fn without_swappable(&self) -> WordList {
        let swappable = swappable_words(self);
        WordList {
            words: self.words.difference(&swappable).copied().collect(),
            source_name: self.source_name.clone(),
        }
    }
}

pub fn load_word_list(path: impl AsRef<Path>) -> Result<WordList, CorpusError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
        path: name.clone(),
        message: e.to_string(),
    })?;
    WordList::parse(&name, &text)
}

/// Words that turn into a different listed word when their 2nd and 4th
/// letters are exchanged.
pub fn swappable_words(wl: &WordList) -> BTreeSet<Word> {
    wl.iter()
        .filter(|w| {
            let partner = w.even_swap();
            partner != **w && wl.contains(&partner)
        })
        .copied()
        .collect()
}

/// Number of the 676 ordered letter pairs that never occur as adjacent
/// letters in any word of the list.
pub fn zero_bigram_count(wl: &WordList) -> usize {
    let mut seen = [[false; 26]; 26];
    for w in wl.iter() {
        for pair in w.letters().windows(2) {
            seen[(pair[0] - b'A') as usize][(pair[1] - b'A') as usize] = true;
        }
    }
    seen.iter().flatten().filter(|&&s| !s).count()
}

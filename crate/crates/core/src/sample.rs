//! Samples: finite sets of words over a declared alphabet.

use crate::error::{Error, Result};
use crate::pattern::{Alphabet, Symbol};

/// A word is a sequence of alphabet symbols.
pub type Word = Vec<Symbol>;

/// Non-empty list of non-empty words over an alphabet. Duplicate words are
/// dropped at construction (keeping first-occurrence order), so support
/// counts distinct words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl Sample {
    pub fn new(alphabet: Alphabet, words: Vec<Word>) -> Result<Sample> {
        if words.is_empty() {
            return Err(Error::EmptySample);
        }
        let mut deduped: Vec<Word> = Vec::new();
        for w in words {
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            for s in &w {
                if s.index() >= alphabet.len() {
                    return Err(Error::UnknownSymbol(format!("#{}", s.index())));
                }
            }
            if !deduped.contains(&w) {
                deduped.push(w);
            }
        }
        Ok(Sample { alphabet, words: deduped })
    }

    /// Builds a sample from whitespace-free text words over single-character
    /// symbols; mostly a test convenience.
    pub fn from_char_words(alphabet: Alphabet, texts: &[&str]) -> Result<Sample> {
        let words = texts
            .iter()
            .map(|t| {
                t.chars()
                    .map(|c| {
                        alphabet
                            .lookup(&c.to_string())
                            .ok_or_else(|| Error::UnknownSymbol(c.to_string()))
                    })
                    .collect::<Result<Word>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Sample::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn render_word(&self, word: &[Symbol]) -> String {
        render_word(word, &self.alphabet)
    }

    /// Length of the shortest word; ties broken by sample order.
    pub fn shortest_word(&self) -> &Word {
        self.words
            .iter()
            .min_by_key(|w| w.len())
            .expect("samples are non-empty")
    }
}

/// Joins the word's tokens with spaces, or concatenates when every token is a
/// single character.
pub fn render_word(word: &[Symbol], alphabet: &Alphabet) -> String {
    let single = alphabet.tokens().all(|t| t.chars().count() == 1);
    let tokens: Vec<&str> = word.iter().map(|&s| alphabet.token(s)).collect();
    if single {
        tokens.concat()
    } else {
        tokens.join(" ")
    }
}

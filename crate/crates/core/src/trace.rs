//! Trace-file ingestion: one trace per line, tokens whitespace-separated.
//!
//! An optional `#alphabet: tok tok ...` header declares the alphabet (and its
//! order); other `#` lines are comments and blank lines are skipped. Without
//! a header the alphabet is inferred as the sorted set of tokens appearing in
//! the traces. In chars mode each line is read as a sequence of
//! single-character symbols instead.

use crate::error::{Error, Result};
use crate::pattern::Alphabet;
use crate::sample::{Sample, Word};

/// Parses trace-file text into a sample.
pub fn parse_trace_file(text: &str, chars_mode: bool) -> Result<Sample> {
    let mut declared: Option<Vec<String>> = None;
    let mut lines: Vec<&str> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(decl) = rest.trim_start().strip_prefix("alphabet:") {
                let tokens: Vec<String> = tokenize(decl, chars_mode);
                if declared.is_none() {
                    declared = Some(tokens);
                }
            }
            continue;
        }
        lines.push(trimmed);
    }
    if lines.is_empty() {
        return Err(Error::EmptySample);
    }

    let token_lines: Vec<Vec<String>> = lines.iter().map(|l| tokenize(l, chars_mode)).collect();

    let alphabet = match declared {
        Some(tokens) => Alphabet::new(tokens)?,
        None => inferred_alphabet(token_lines.iter().flatten().map(String::as_str))?,
    };

    let words = token_lines
        .iter()
        .map(|tokens| {
            tokens
                .iter()
                .map(|t| alphabet.lookup(t).ok_or_else(|| Error::UnknownSymbol(t.clone())))
                .collect::<Result<Word>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Sample::new(alphabet, words)
}

/// Parses a single word with the same tokenization rules. Whitespace splits
/// into tokens; a whitespace-free word falls back to per-character symbols,
/// so `aabacabcbbacc` works without flags.
pub fn parse_word_text(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let tokens = word_tokens(text);
    if tokens.is_empty() {
        return Err(Error::EmptyWord);
    }
    tokens
        .iter()
        .map(|t| alphabet.lookup(t).ok_or_else(|| Error::UnknownSymbol(t.clone())))
        .collect()
}

/// Sorted alphabet inferred from a word and the terminal tokens of a pattern
/// text (everything but `$k` tokens).
pub fn alphabet_for_match(word_text: &str, pattern_text: &str) -> Result<Alphabet> {
    let mut tokens = word_tokens(word_text);
    tokens.extend(
        pattern_text
            .split_whitespace()
            .filter(|t| !t.starts_with('$'))
            .map(str::to_string),
    );
    inferred_alphabet(tokens.iter().map(String::as_str))
}

fn word_tokens(text: &str) -> Vec<String> {
    let trimmed = text.trim();
    if trimmed.contains(char::is_whitespace) {
        tokenize(trimmed, false)
    } else {
        tokenize(trimmed, true)
    }
}

fn tokenize(line: &str, chars_mode: bool) -> Vec<String> {
    if chars_mode {
        line.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_string())
            .collect()
    } else {
        line.split_whitespace().map(str::to_string).collect()
    }
}

fn inferred_alphabet<'a>(tokens: impl Iterator<Item = &'a str>) -> Result<Alphabet> {
    let mut distinct: Vec<&str> = tokens.collect();
    distinct.sort_unstable();
    distinct.dedup();
    Alphabet::new(distinct)
}

//! Classical pattern-language membership: does some substitution of
//! variables by non-empty words turn the pattern into exactly this word?
//!
//! The problem is NP-complete in general, so the matcher is a backtracking
//! search over (pattern position, word position). A variable's first
//! occurrence tries candidate image lengths shortest-first, which makes the
//! returned witness deterministic; repeat occurrences just verify the bound
//! image. Failed (position, position, relevant-bindings) states are memoized.

use std::collections::HashSet;

use crate::pattern::{Pattern, PatternItem, Symbol};
use crate::sample::{Sample, Word};
use crate::substitution::WordSubstitution;

/// Outcome of a membership test; the witness reproduces the word when
/// applied to the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    pub matched: bool,
    pub witness: Option<WordSubstitution>,
}

impl MatchResult {
    fn no() -> MatchResult {
        MatchResult { matched: false, witness: None }
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Term(Symbol),
    Var(usize),
}

/// (pattern index, word index, bindings of variables that recur later).
type FailedState = (usize, usize, Vec<(usize, Word)>);

struct Search<'a> {
    word: &'a [Symbol],
    items: Vec<Slot>,
    // items[i..] item count, used for the length lower bound
    suffix_count: Vec<usize>,
    // occurrences of each variable slot within items[i..]
    occ_suffix: Vec<Vec<usize>>,
    bindings: Vec<Option<Word>>,
    failed: HashSet<FailedState>,
}

impl<'a> Search<'a> {
    fn new(word: &'a [Symbol], pattern: &Pattern) -> Search<'a> {
        let order = pattern.variables();
        let items: Vec<Slot> = pattern
            .items()
            .iter()
            .map(|it| match it {
                PatternItem::Terminal(s) => Slot::Term(*s),
                PatternItem::Var(v) => Slot::Var(order.iter().position(|u| u == v).unwrap()),
            })
            .collect();
        let n = items.len();
        let slots = order.len();
        let mut suffix_count = vec![0usize; n + 1];
        let mut occ_suffix = vec![vec![0usize; slots]; n + 1];
        for i in (0..n).rev() {
            suffix_count[i] = suffix_count[i + 1] + 1;
            occ_suffix[i] = occ_suffix[i + 1].clone();
            if let Slot::Var(slot) = items[i] {
                occ_suffix[i][slot] += 1;
            }
        }
        Search {
            word,
            items,
            suffix_count,
            occ_suffix,
            bindings: vec![None; slots],
            failed: HashSet::new(),
        }
    }

    /// Minimum word length items[i..] can still consume under the current
    /// bindings (unbound variables count 1 per occurrence).
    fn remaining_min(&self, i: usize) -> usize {
        let mut min = self.suffix_count[i];
        for (slot, binding) in self.bindings.iter().enumerate() {
            if let Some(image) = binding {
                min += self.occ_suffix[i][slot] * (image.len() - 1);
            }
        }
        min
    }

    fn memo_key(&self, i: usize, j: usize) -> FailedState {
        let relevant = self
            .bindings
            .iter()
            .enumerate()
            .filter(|(slot, b)| b.is_some() && self.occ_suffix[i][*slot] > 0)
            .map(|(slot, b)| (slot, b.clone().unwrap()))
            .collect();
        (i, j, relevant)
    }

    fn solve(&mut self, i: usize, j: usize) -> bool {
        if i == self.items.len() {
            return j == self.word.len();
        }
        if j + self.remaining_min(i) > self.word.len() {
            return false;
        }
        let key = self.memo_key(i, j);
        if self.failed.contains(&key) {
            return false;
        }
        let ok = match self.items[i] {
            Slot::Term(s) => j < self.word.len() && self.word[j] == s && self.solve(i + 1, j + 1),
            Slot::Var(slot) => match &self.bindings[slot] {
                Some(image) => {
                    let len = image.len();
                    j + len <= self.word.len()
                        && self.word[j..j + len] == image[..]
                        && self.solve(i + 1, j + len)
                }
                None => {
                    let mut found = false;
                    for len in 1..=self.word.len().saturating_sub(j) {
                        self.bindings[slot] = Some(self.word[j..j + len].to_vec());
                        // other occurrences of this slot in the suffix grow too
                        if j + len + self.remaining_min(i + 1) > self.word.len() {
                            self.bindings[slot] = None;
                            break;
                        }
                        if self.solve(i + 1, j + len) {
                            found = true;
                            break;
                        }
                        self.bindings[slot] = None;
                    }
                    found
                }
            },
        };
        if !ok {
            self.failed.insert(key);
        }
        ok
    }
}

/// Decides w ∈ L(p) under word-valued, non-empty substitutions. When matched,
/// the witness is the substitution with shortest-first images in pattern
/// order.
pub fn member(word: &[Symbol], pattern: &Pattern) -> MatchResult {
    if word.len() < pattern.len() {
        return MatchResult::no();
    }
    let mut search = Search::new(word, pattern);
    if !search.solve(0, 0) {
        return MatchResult::no();
    }
    let order = pattern.variables();
    let mut witness = WordSubstitution::new();
    for (slot, binding) in search.bindings.iter().enumerate() {
        if let Some(image) = binding {
            witness.bind(order[slot], image.clone());
        }
    }
    debug_assert_eq!(witness.apply(pattern).as_deref(), Ok(word));
    MatchResult { matched: true, witness: Some(witness) }
}

/// S ⊆ L(p): every sample word is a member.
pub fn sample_subset(sample: &Sample, pattern: &Pattern) -> bool {
    sample.words().iter().all(|w| member(w, pattern).matched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Alphabet;
    use crate::sample::Sample;

    fn word(text: &str, a: &Alphabet) -> Vec<Symbol> {
        text.chars().map(|c| a.lookup(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn running_example_matches_with_expected_witness() {
        let a = Alphabet::chars("abc").unwrap();
        let p = Pattern::parse("$1 a b $2 $1 a $3 b c $2", &a).unwrap();
        let w = word("baabcacbaacbccac", &a);
        let result = member(&w, &p);
        assert!(result.matched);
        let h = result.witness.unwrap();
        assert_eq!(h.image(crate::pattern::Variable::new(1)), Some(&word("ba", &a)));
        assert_eq!(h.image(crate::pattern::Variable::new(2)), Some(&word("cac", &a)));
        assert_eq!(h.image(crate::pattern::Variable::new(3)), Some(&word("c", &a)));
        assert_eq!(h.apply(&p).unwrap(), w);
    }

    #[test]
    fn word_shorter_than_pattern_never_matches() {
        let a = Alphabet::chars("ab").unwrap();
        let p = Pattern::parse("$1 $2", &a).unwrap();
        assert!(!member(&word("a", &a), &p).matched);
    }

    #[test]
    fn squares_need_equal_halves() {
        let a = Alphabet::chars("ab").unwrap();
        let p = Pattern::parse("$1 $1", &a).unwrap();
        assert!(!member(&word("ab", &a), &p).matched);
        let result = member(&word("aa", &a), &p);
        assert!(result.matched);
        let h = result.witness.unwrap();
        assert_eq!(h.image(crate::pattern::Variable::new(1)), Some(&word("a", &a)));
    }

    #[test]
    fn variable_free_pattern_is_word_equality() {
        let a = Alphabet::chars("ab").unwrap();
        let p = Pattern::parse("a b", &a).unwrap();
        assert!(member(&word("ab", &a), &p).matched);
        assert!(!member(&word("aa", &a), &p).matched);
        assert!(!member(&word("aba", &a), &p).matched);
    }

    #[test]
    fn sample_subset_checks_every_word() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abb", "abab"]).unwrap();
        assert!(sample_subset(&s, &Pattern::parse("a b $1", &a).unwrap()));
        assert!(!sample_subset(&s, &Pattern::parse("a b b", &a).unwrap()));
        let single = Sample::from_char_words(a.clone(), &["abb"]).unwrap();
        assert!(sample_subset(&single, &Pattern::parse("a b b", &a).unwrap()));
    }
}

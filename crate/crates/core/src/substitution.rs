//! Variable substitutions and subsequence embeddings, the witness objects
//! produced by the matchers.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pattern::{ConstrainedPattern, Pattern, PatternItem, Symbol, Variable};
use crate::sample::Word;

/// Word-valued substitution for classical pattern matching; images are
/// non-empty words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSubstitution {
    map: BTreeMap<Variable, Word>,
}

impl WordSubstitution {
    pub fn new() -> WordSubstitution {
        WordSubstitution { map: BTreeMap::new() }
    }

    pub fn bind(&mut self, var: Variable, image: Word) {
        assert!(!image.is_empty(), "substitution images are non-empty");
        self.map.insert(var, image);
    }

    pub fn image(&self, var: Variable) -> Option<&Word> {
        self.map.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Word)> {
        self.map.iter()
    }

    /// Homomorphic extension: the word obtained by replacing every variable
    /// by its image. Fails if some variable of the pattern is unbound.
    pub fn apply(&self, pattern: &Pattern) -> Result<Word> {
        let mut out = Vec::new();
        for item in pattern.items() {
            match item {
                PatternItem::Terminal(s) => out.push(*s),
                PatternItem::Var(v) => {
                    let image = self.map.get(v).ok_or(Error::IncompleteSubstitution)?;
                    out.extend_from_slice(image);
                }
            }
        }
        Ok(out)
    }
}

impl Default for WordSubstitution {
    fn default() -> Self {
        Self::new()
    }
}

/// Symbol-valued substitution for subsequence matching; each variable maps to
/// a single alphabet symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymbolSubstitution {
    map: BTreeMap<Variable, Symbol>,
}

impl SymbolSubstitution {
    pub fn new() -> SymbolSubstitution {
        SymbolSubstitution { map: BTreeMap::new() }
    }

    pub fn bind(&mut self, var: Variable, symbol: Symbol) {
        self.map.insert(var, symbol);
    }

    pub fn image(&self, var: Variable) -> Option<Symbol> {
        self.map.get(&var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Symbol)> {
        self.map.iter()
    }

    /// The symbol sequence h(pattern); fails if a variable is unbound.
    pub fn apply(&self, pattern: &Pattern) -> Result<Word> {
        pattern
            .items()
            .iter()
            .map(|item| match item {
                PatternItem::Terminal(s) => Ok(*s),
                PatternItem::Var(v) => self.map.get(v).copied().ok_or(Error::IncompleteSubstitution),
            })
            .collect()
    }
}

impl Default for SymbolSubstitution {
    fn default() -> Self {
        Self::new()
    }
}

/// Pattern-to-pattern substitution: each variable of the source maps to a
/// single item of the target. Witnesses language inclusion between
/// equal-length patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSubstitution {
    map: BTreeMap<Variable, PatternItem>,
}

impl PatternSubstitution {
    pub fn new() -> PatternSubstitution {
        PatternSubstitution { map: BTreeMap::new() }
    }

    pub fn bind(&mut self, var: Variable, item: PatternItem) {
        self.map.insert(var, item);
    }

    pub fn image(&self, var: Variable) -> Option<PatternItem> {
        self.map.get(&var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &PatternItem)> {
        self.map.iter()
    }

    /// h(pattern), identity on terminals; fails if a variable is unbound.
    pub fn apply(&self, pattern: &Pattern) -> Result<Pattern> {
        let items = pattern
            .items()
            .iter()
            .map(|item| match item {
                PatternItem::Terminal(s) => Ok(PatternItem::Terminal(*s)),
                PatternItem::Var(v) => self.map.get(v).copied().ok_or(Error::IncompleteSubstitution),
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(items)
    }
}

impl Default for PatternSubstitution {
    fn default() -> Self {
        Self::new()
    }
}

/// Strictly increasing 1-based word positions, one per pattern item,
/// witnessing a gap-constrained subsequence occurrence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Embedding {
    positions: Vec<usize>,
}

impl Embedding {
    pub fn new(positions: Vec<usize>) -> Embedding {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]), "embedding positions must increase");
        debug_assert!(positions.iter().all(|&p| p >= 1), "embedding positions are 1-based");
        Embedding { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Checks this embedding against a word and a substituted pattern:
    /// positions in bounds and increasing, symbols agree, every gap admitted.
    pub fn verifies(&self, word: &[Symbol], cp: &ConstrainedPattern, assignment: &SymbolSubstitution) -> bool {
        let Ok(image) = assignment.apply(cp.pattern()) else {
            return false;
        };
        if self.positions.len() != image.len() {
            return false;
        }
        for (&pos, &sym) in self.positions.iter().zip(image.iter()) {
            if pos < 1 || pos > word.len() || word[pos - 1] != sym {
                return false;
            }
        }
        for (pair, bound) in self.positions.windows(2).zip(cp.constraints().bounds()) {
            if pair[1] <= pair[0] {
                return false;
            }
            if !bound.admits(pair[1] - pair[0] - 1) {
                return false;
            }
        }
        true
    }
}

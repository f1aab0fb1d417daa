//! The shared syntactic universe: alphabets, patterns, and gap constraints.
//!
//! Pattern text syntax is whitespace-separated tokens, `$k` for variable k
//! and bare tokens for terminals (`a $1 b $1`). Gap constraints are
//! comma-separated `lo-hi` pairs where `hi` may be `inf` (`1-3,4-4,2-3`).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a terminal symbol within its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub(crate) u32);

impl Symbol {
    pub fn index(&self) -> usize {
        self.0 as usize
    }
}

/// Ordered finite set of terminal symbol tokens. The order is the declaration
/// order and is fixed at construction; it drives candidate enumeration and
/// rendering everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashMap::new();
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() {
                return Err(Error::EmptySymbolToken);
            }
            if seen.insert(t.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(t.clone()));
            }
        }
        Ok(Alphabet { tokens })
    }

    /// Alphabet of single-character symbols, e.g. `Alphabet::chars("abc")`.
    pub fn chars(letters: &str) -> Result<Alphabet> {
        Alphabet::new(letters.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn lookup(&self, token: &str) -> Option<Symbol> {
        self.tokens.iter().position(|t| t == token).map(|i| Symbol(i as u32))
    }

    pub fn token(&self, s: Symbol) -> &str {
        &self.tokens[s.index()]
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(String::as_str)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.tokens.len() as u32).map(Symbol)
    }
}

/// Variable placeholder, rendered `$k`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u32);

impl Variable {
    pub fn new(index: usize) -> Variable {
        assert!(index >= 1, "variable indices are 1-based");
        Variable(index as u32)
    }

    pub fn index(&self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "${}", self.0)
    }
}

/// One pattern position: a fixed terminal or a variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternItem {
    Terminal(Symbol),
    Var(Variable),
}

impl PatternItem {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            PatternItem::Terminal(s) => alphabet.token(*s).to_string(),
            PatternItem::Var(v) => v.to_string(),
        }
    }
}

/// A non-empty sequence of terminals and variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    items: Vec<PatternItem>,
}

impl Pattern {
    pub fn new(items: Vec<PatternItem>) -> Result<Pattern> {
        if items.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { items })
    }

    /// Parses the `$k` / bare-token syntax against a declared alphabet,
    /// keeping the written variable numbering.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Pattern> {
        let mut items = Vec::new();
        for token in text.split_whitespace() {
            if let Some(rest) = token.strip_prefix('$') {
                let index: usize = rest
                    .parse()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::BadVariableToken(token.to_string()))?;
                items.push(PatternItem::Var(Variable::new(index)));
            } else {
                let sym = alphabet
                    .lookup(token)
                    .ok_or_else(|| Error::UnknownSymbol(token.to_string()))?;
                items.push(PatternItem::Terminal(sym));
            }
        }
        Pattern::new(items)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.items
            .iter()
            .map(|it| it.render(alphabet))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn items(&self) -> &[PatternItem] {
        &self.items
    }

    /// Distinct variables in order of first occurrence.
    pub fn variables(&self) -> Vec<Variable> {
        let mut seen = Vec::new();
        for item in &self.items {
            if let PatternItem::Var(v) = item {
                if !seen.contains(v) {
                    seen.push(*v);
                }
            }
        }
        seen
    }

    pub fn distinct_var_count(&self) -> usize {
        self.variables().len()
    }

    /// The word this pattern spells, if it is variable-free.
    pub fn as_word(&self) -> Option<Vec<Symbol>> {
        self.items
            .iter()
            .map(|it| match it {
                PatternItem::Terminal(s) => Some(*s),
                PatternItem::Var(_) => None,
            })
            .collect()
    }

    /// Pattern spelling the given word as terminals.
    pub fn from_word(word: &[Symbol]) -> Result<Pattern> {
        Pattern::new(word.iter().map(|&s| PatternItem::Terminal(s)).collect())
    }

    /// Renumbers variables 1, 2, ... by first occurrence. Idempotent; two
    /// patterns are equal up to variable renaming iff their canonical forms
    /// are equal.
    pub fn canonicalize(&self) -> Pattern {
        let order = self.variables();
        let items = self
            .items
            .iter()
            .map(|it| match it {
                PatternItem::Terminal(s) => PatternItem::Terminal(*s),
                PatternItem::Var(v) => {
                    let slot = order.iter().position(|u| u == v).unwrap();
                    PatternItem::Var(Variable::new(slot + 1))
                }
            })
            .collect();
        Pattern { items }
    }

    pub fn is_canonical(&self) -> bool {
        self == &self.canonicalize()
    }

    /// All occurrences of `from` replaced by `to`.
    pub fn replace_var(&self, from: Variable, to: PatternItem) -> Pattern {
        let items = self
            .items
            .iter()
            .map(|it| match it {
                PatternItem::Var(v) if *v == from => to,
                other => *other,
            })
            .collect();
        Pattern { items }
    }

    /// The most general pattern `$1 $2 ... $len`.
    pub fn all_variables(len: usize) -> Result<Pattern> {
        Pattern::new((1..=len).map(|k| PatternItem::Var(Variable::new(k))).collect())
    }
}

/// Lower and upper bound on one gap; `hi == None` means unbounded, rendered
/// `inf`. The gap between embedded positions p and q is q - p - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GapBound {
    lo: usize,
    hi: Option<usize>,
}

impl GapBound {
    pub fn new(lo: usize, hi: Option<usize>) -> Result<GapBound> {
        if let Some(hi) = hi {
            if lo > hi {
                return Err(Error::InvertedGapBound { lo, hi });
            }
        }
        Ok(GapBound { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> Option<usize> {
        self.hi
    }

    pub fn admits(&self, gap: usize) -> bool {
        gap >= self.lo && self.hi.is_none_or(|hi| gap <= hi)
    }
}

impl fmt::Display for GapBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "{}-{}", self.lo, hi),
            None => write!(f, "{}-inf", self.lo),
        }
    }
}

/// Tuple of per-gap bounds; a pattern of length n pairs with n - 1 of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GapConstraints {
    bounds: Vec<GapBound>,
}

impl GapConstraints {
    pub fn new(bounds: Vec<GapBound>) -> GapConstraints {
        GapConstraints { bounds }
    }

    /// Parses `lo-hi,lo-hi,...`; the empty string is the empty tuple.
    pub fn parse(text: &str) -> Result<GapConstraints> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(GapConstraints::default());
        }
        let mut bounds = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let bad = || Error::BadGapBound(part.to_string());
            let (lo, hi) = part.split_once('-').ok_or_else(bad)?;
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi = match hi.trim() {
                "inf" => None,
                digits => Some(digits.parse::<usize>().map_err(|_| bad())?),
            };
            bounds.push(GapBound::new(lo, hi)?);
        }
        Ok(GapConstraints::new(bounds))
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn bounds(&self) -> &[GapBound] {
        &self.bounds
    }
}

impl fmt::Display for GapConstraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bounds.iter().map(GapBound::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A pattern paired with gap constraints of matching arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstrainedPattern {
    pattern: Pattern,
    constraints: GapConstraints,
}

impl ConstrainedPattern {
    pub fn new(pattern: Pattern, constraints: GapConstraints) -> Result<ConstrainedPattern> {
        if constraints.len() != pattern.len() - 1 {
            return Err(Error::GapArity {
                pattern_len: pattern.len(),
                bounds_len: constraints.len(),
            });
        }
        Ok(ConstrainedPattern { pattern, constraints })
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn constraints(&self) -> &GapConstraints {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn canonicalize(&self) -> ConstrainedPattern {
        ConstrainedPattern {
            pattern: self.pattern.canonicalize(),
            constraints: self.constraints.clone(),
        }
    }
}

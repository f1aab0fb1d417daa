//! Restricted pattern classes. Matching is NP-complete for unrestricted
//! patterns, so discovery is parameterised by a syntactic class with a
//! tractable (or at least bounded) matching problem: regular patterns
//! (every variable occurs once), non-cross patterns (variable occurrence
//! blocks do not interleave), or a cap on the number of distinct variables.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::oracle;
use crate::pattern::{Alphabet, Pattern, PatternItem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternClass {
    All,
    Regular,
    NonCross,
    MaxVars(usize),
}

impl PatternClass {
    /// Class membership test.
    pub fn contains(&self, p: &Pattern) -> bool {
        match self {
            PatternClass::All => true,
            PatternClass::Regular => {
                let vars: Vec<_> = p
                    .items()
                    .iter()
                    .filter_map(|it| match it {
                        PatternItem::Var(v) => Some(*v),
                        _ => None,
                    })
                    .collect();
                let distinct = p.distinct_var_count();
                vars.len() == distinct
            }
            PatternClass::NonCross => {
                // once a new variable appears, previous ones may not recur
                let mut seen = Vec::new();
                for item in p.items() {
                    if let PatternItem::Var(v) = item {
                        match seen.last() {
                            Some(last) if last == v => {}
                            _ if seen.contains(v) => return false,
                            _ => seen.push(*v),
                        }
                    }
                }
                true
            }
            PatternClass::MaxVars(k) => p.distinct_var_count() <= *k,
        }
    }

    /// Parses the CLI spelling: `all`, `regular`, `noncross`, `maxvars:k`.
    pub fn parse(text: &str) -> Result<PatternClass> {
        match text.trim() {
            "all" => Ok(PatternClass::All),
            "regular" => Ok(PatternClass::Regular),
            "noncross" => Ok(PatternClass::NonCross),
            other => {
                if let Some(k) = other.strip_prefix("maxvars:") {
                    let k = k.parse().map_err(|_| Error::BadClassSpec(text.to_string()))?;
                    return Ok(PatternClass::MaxVars(k));
                }
                Err(Error::BadClassSpec(text.to_string()))
            }
        }
    }
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternClass::All => write!(f, "all"),
            PatternClass::Regular => write!(f, "regular"),
            PatternClass::NonCross => write!(f, "noncross"),
            PatternClass::MaxVars(k) => write!(f, "maxvars:{k}"),
        }
    }
}

/// Exhaustively checks the closure property the discovery algorithm relies
/// on, at small sizes: (i) the most general pattern of the given length is in
/// the class, and (ii) every class member of that length is reachable from it
/// by single refinement steps (replacing a variable that occurs once by a
/// terminal or by another variable of the pattern) that stay inside the
/// class throughout. Advisory: a class failing this can make the greedy
/// refinement stop at a non-descriptive pattern.
pub fn validate_closure(cls: &PatternClass, length: usize, alphabet: &Alphabet) -> Result<bool> {
    if length > 4 {
        return Err(Error::SizeGuard { what: "closure validation length", limit: 4, got: length });
    }
    if alphabet.len() > 3 {
        return Err(Error::SizeGuard { what: "closure validation alphabet", limit: 3, got: alphabet.len() });
    }
    let start = Pattern::all_variables(length)?;
    if !cls.contains(&start) {
        return Ok(false);
    }
    let members = oracle::enumerate_patterns(length, alphabet, cls)?;

    // breadth-first over canonical in-class patterns under refinement steps
    let mut reached: Vec<Pattern> = vec![start.canonicalize()];
    let mut queue: VecDeque<Pattern> = reached.clone().into();
    while let Some(p) = queue.pop_front() {
        let vars = p.variables();
        for &v in &vars {
            let occurrences = p
                .items()
                .iter()
                .filter(|it| matches!(it, PatternItem::Var(u) if *u == v))
                .count();
            if occurrences != 1 {
                continue; // only unvisited variables get replaced, and those occur once
            }
            let mut candidates: Vec<PatternItem> =
                alphabet.symbols().map(PatternItem::Terminal).collect();
            candidates.extend(vars.iter().filter(|u| **u != v).map(|u| PatternItem::Var(*u)));
            for c in candidates {
                let q = p.replace_var(v, c).canonicalize();
                if cls.contains(&q) && !reached.contains(&q) {
                    reached.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
    }
    Ok(members.iter().all(|m| reached.contains(m)))
}

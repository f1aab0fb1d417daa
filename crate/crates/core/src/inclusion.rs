//! Language inclusion for equal-length patterns, decided by substitution
//! search: L(a) ⊆ L(b) iff some substitution maps b onto a, item by item.
//!
//! General pattern inclusion is undecidable, so unequal lengths are rejected
//! outright rather than approximated. For subsequence patterns the same
//! characterisation applies when the gap-constraint tuples are identical;
//! differing tuples are refused. The characterisation presumes at least two
//! alphabet letters; over a unary alphabet distinct patterns can denote the
//! same language.

use crate::error::{Error, Result};
use crate::pattern::{ConstrainedPattern, Pattern, PatternItem};
use crate::substitution::PatternSubstitution;

/// Searches for h with h(source) = target, position by position. Terminals
/// must line up; each source variable must map consistently to one target
/// item. Linear, no backtracking: equal lengths make the morphism pointwise.
pub fn find_substitution(source: &Pattern, target: &Pattern) -> Result<Option<PatternSubstitution>> {
    if source.len() != target.len() {
        return Err(Error::LengthMismatch { left: source.len(), right: target.len() });
    }
    let mut sub = PatternSubstitution::new();
    for (s, t) in source.items().iter().zip(target.items()) {
        match s {
            PatternItem::Terminal(sym) => {
                if *t != PatternItem::Terminal(*sym) {
                    return Ok(None);
                }
            }
            PatternItem::Var(v) => match sub.image(*v) {
                Some(existing) if existing != *t => return Ok(None),
                Some(_) => {}
                None => sub.bind(*v, *t),
            },
        }
    }
    debug_assert_eq!(sub.apply(source).as_ref(), Ok(target));
    Ok(Some(sub))
}

/// L(a) ⊆ L(b) for equal-length patterns under classical semantics.
pub fn included(a: &Pattern, b: &Pattern) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(find_substitution(b, a)?.is_some())
}

pub fn strictly_included(a: &Pattern, b: &Pattern) -> Result<bool> {
    Ok(included(a, b)? && !included(b, a)?)
}

/// Both inclusions hold; equivalent patterns are exactly renamings of each
/// other, so this agrees with canonical-form equality.
pub fn equivalent(a: &Pattern, b: &Pattern) -> Result<bool> {
    Ok(included(a, b)? && included(b, a)?)
}

/// L(a, C) ⊆ L(b, C) for subsequence patterns sharing one constraint tuple.
pub fn included_subseq(a: &ConstrainedPattern, b: &ConstrainedPattern) -> Result<bool> {
    if a.constraints() != b.constraints() {
        return Err(Error::ConstraintMismatch);
    }
    included(a.pattern(), b.pattern())
}

pub fn strictly_included_subseq(a: &ConstrainedPattern, b: &ConstrainedPattern) -> Result<bool> {
    Ok(included_subseq(a, b)? && !included_subseq(b, a)?)
}

pub fn equivalent_subseq(a: &ConstrainedPattern, b: &ConstrainedPattern) -> Result<bool> {
    Ok(included_subseq(a, b)? && included_subseq(b, a)?)
}

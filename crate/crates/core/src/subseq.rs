//! Gap-constrained subsequence matching with symbol-valued variables.
//!
//! A constrained pattern (p, C) matches w if some substitution h of the
//! variables by single symbols lets h(p) embed into w at strictly increasing
//! positions whose consecutive gaps satisfy C. A greedy earliest-position
//! embedding is wrong under upper gap bounds (a later start can succeed where
//! the earliest fails), so feasibility is decided by a reachable-position
//! sweep across the word, linear per candidate assignment.

use std::collections::BTreeSet;

use crate::pattern::{ConstrainedPattern, Symbol};
use crate::ratio::Ratio;
use crate::sample::Sample;
use crate::substitution::{Embedding, SymbolSubstitution};

/// Outcome of a subsequence match; the witness is the lexicographically least
/// (assignment, embedding) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubseqMatch {
    pub matched: bool,
    pub witness: Option<(SymbolSubstitution, Embedding)>,
}

/// Decides whether the constrained pattern matches the word.
pub fn match_subseq(word: &[Symbol], cp: &ConstrainedPattern) -> SubseqMatch {
    let mut out = SubseqMatch { matched: false, witness: None };
    for_each_witness(word, cp, &mut |assignment, embedding| {
        debug_assert!(embedding.verifies(word, cp, &assignment));
        out.matched = true;
        out.witness = Some((assignment, embedding));
        false // stop at the first witness
    });
    out
}

/// All witnesses in lexicographic order (assignment-major, then embedding
/// positions), truncated at `limit`. Empty iff the pattern does not match.
pub fn enumerate_embeddings(
    word: &[Symbol],
    cp: &ConstrainedPattern,
    limit: usize,
) -> Vec<(SymbolSubstitution, Embedding)> {
    assert!(limit >= 1, "enumeration limit must be positive");
    let mut out = Vec::new();
    for_each_witness(word, cp, &mut |assignment, embedding| {
        out.push((assignment, embedding));
        out.len() < limit
    });
    out
}

/// Fraction of distinct sample words matched by the pattern, over |S|.
pub fn support(sample: &Sample, cp: &ConstrainedPattern) -> Ratio {
    let matched = sample
        .words()
        .iter()
        .filter(|w| match_subseq(w, cp).matched)
        .count();
    Ratio::new(matched as u64, sample.len() as u64)
}

/// Walks witnesses in lexicographic order, calling `visit` for each; `visit`
/// returns false to stop early.
fn for_each_witness(
    word: &[Symbol],
    cp: &ConstrainedPattern,
    visit: &mut dyn FnMut(SymbolSubstitution, Embedding) -> bool,
) {
    let pattern = cp.pattern();
    let vars = pattern.variables();
    // variables can only take symbols that occur in the word
    let present: Vec<Symbol> = word.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if !vars.is_empty() && present.is_empty() {
        return;
    }
    let mut choice = vec![0usize; vars.len()];
    'assignments: loop {
        let mut assignment = SymbolSubstitution::new();
        for (slot, var) in vars.iter().enumerate() {
            assignment.bind(*var, present[choice[slot]]);
        }
        let image: Vec<Symbol> = assignment
            .apply(pattern)
            .expect("assignment binds every pattern variable");
        if let Some(completable) = completable_positions(word, &image, cp) {
            if !emit_embeddings(cp, &assignment, &completable, visit) {
                return;
            }
        }
        // advance the assignment odometer (alphabet order per slot)
        for slot in (0..choice.len()).rev() {
            choice[slot] += 1;
            if choice[slot] < present.len() {
                continue 'assignments;
            }
            choice[slot] = 0;
        }
        break;
    }
}

/// Positions each pattern item can take in some constraint-respecting
/// embedding: a forward reachability sweep intersected with a backward
/// can-complete sweep. Returns None when no embedding exists.
fn completable_positions(
    word: &[Symbol],
    image: &[Symbol],
    cp: &ConstrainedPattern,
) -> Option<Vec<Vec<usize>>> {
    let n = word.len();
    let bounds = cp.constraints().bounds();
    // forward: reachable positions per pattern index (1-based)
    let mut reach: Vec<Vec<usize>> = Vec::with_capacity(image.len());
    for (j, &sym) in image.iter().enumerate() {
        let level: Vec<usize> = if j == 0 {
            (1..=n).filter(|&q| word[q - 1] == sym).collect()
        } else {
            let prev = &reach[j - 1];
            if prev.is_empty() {
                return None;
            }
            let bound = bounds[j - 1];
            let lo_off = bound.lo() + 1;
            let hi_off = bound.hi().map(|h| h.saturating_add(1)).unwrap_or(n);
            (1..=n)
                .filter(|&q| word[q - 1] == sym)
                .filter(|&q| {
                    // some previous position within [q - hi_off, q - lo_off]
                    prev.iter().any(|&p| p + lo_off <= q && q <= p.saturating_add(hi_off))
                })
                .collect()
        };
        if level.is_empty() {
            return None;
        }
        reach.push(level);
    }
    // backward: keep positions from which the suffix can still complete
    let mut completable = reach;
    for j in (0..completable.len() - 1).rev() {
        let bound = bounds[j];
        let lo_off = bound.lo() + 1;
        let hi_off = bound.hi().map(|h| h.saturating_add(1)).unwrap_or(n);
        let next = completable[j + 1].clone();
        completable[j].retain(|&p| next.iter().any(|&q| p + lo_off <= q && q <= p.saturating_add(hi_off)));
        if completable[j].is_empty() {
            return None;
        }
    }
    Some(completable)
}

/// Depth-first enumeration over the completable position sets, ascending at
/// each level, which yields embeddings in lexicographic order.
fn emit_embeddings(
    cp: &ConstrainedPattern,
    assignment: &SymbolSubstitution,
    completable: &[Vec<usize>],
    visit: &mut dyn FnMut(SymbolSubstitution, Embedding) -> bool,
) -> bool {
    let bounds = cp.constraints().bounds();
    let mut stack: Vec<usize> = Vec::with_capacity(completable.len());

    fn rec(
        completable: &[Vec<usize>],
        bounds: &[crate::pattern::GapBound],
        stack: &mut Vec<usize>,
        assignment: &SymbolSubstitution,
        visit: &mut dyn FnMut(SymbolSubstitution, Embedding) -> bool,
    ) -> bool {
        let j = stack.len();
        if j == completable.len() {
            return visit(assignment.clone(), Embedding::new(stack.clone()));
        }
        for &q in &completable[j] {
            if j > 0 {
                let p = stack[j - 1];
                if q <= p {
                    continue;
                }
                if !bounds[j - 1].admits(q - p - 1) {
                    continue;
                }
            }
            stack.push(q);
            let keep_going = rec(completable, bounds, stack, assignment, visit);
            stack.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    rec(completable, bounds, &mut stack, assignment, visit)
}

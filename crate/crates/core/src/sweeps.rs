//! Reproducible oracle-vs-matcher agreement sweeps, exhaustive at tiny sizes
//! and seeded-random at the oracle size caps. These back the `verify` CLI
//! command and the acceptance suite.

use crate::angluin;
use crate::classes::PatternClass;
use crate::error::{Error, Result};
use crate::oracle;
use crate::pattern::{Alphabet, ConstrainedPattern, GapBound, GapConstraints, Pattern, PatternItem, Symbol, Variable};
use crate::sample::Word;
use crate::subseq;

/// Tiny deterministic RNG (splitmix64). Sweeps must replay byte-identically
/// from a seed across releases, which rules out external RNG crates.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in 0..n.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }
}

/// One case where the fast matcher and the brute-force oracle disagreed.
#[derive(Debug, Clone)]
pub struct Disagreement {
    pub case: String,
    pub main: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub label: String,
    pub cases: usize,
    pub disagreements: Vec<Disagreement>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// All words of length 1..=max over the alphabet.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let symbols: Vec<Symbol> = alphabet.symbols().collect();
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut idx = vec![0usize; len];
        'words: loop {
            out.push(idx.iter().map(|&i| symbols[i]).collect());
            for slot in (0..len).rev() {
                idx[slot] += 1;
                if idx[slot] < symbols.len() {
                    continue 'words;
                }
                idx[slot] = 0;
            }
            break;
        }
    }
    out
}

/// All gap-constraint tuples of the given arity over the bound set.
pub fn all_gap_tuples(bounds: &[GapBound], arity: usize) -> Vec<GapConstraints> {
    if arity == 0 {
        return vec![GapConstraints::default()];
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; arity];
    'tuples: loop {
        out.push(GapConstraints::new(idx.iter().map(|&i| bounds[i]).collect()));
        for slot in (0..arity).rev() {
            idx[slot] += 1;
            if idx[slot] < bounds.len() {
                continue 'tuples;
            }
            idx[slot] = 0;
        }
        break;
    }
    out
}

/// The bound pairs used by the exhaustive subsequence sweep: lo and hi drawn
/// from {0, 1, inf}.
pub fn tiny_bound_pairs() -> Vec<GapBound> {
    vec![
        GapBound::new(0, Some(0)).unwrap(),
        GapBound::new(0, Some(1)).unwrap(),
        GapBound::new(0, None).unwrap(),
        GapBound::new(1, Some(1)).unwrap(),
        GapBound::new(1, None).unwrap(),
    ]
}

/// Exhaustive subsequence agreement: every pattern up to `max_pattern_len`
/// over the alphabet, every gap tuple over `bound_pairs`, every word up to
/// `max_word_len`.
pub fn subseq_exhaustive_sweep(
    alphabet: &Alphabet,
    max_pattern_len: usize,
    bound_pairs: &[GapBound],
    max_word_len: usize,
) -> Result<SweepReport> {
    let words = all_words(alphabet, max_word_len);
    let mut report = SweepReport {
        label: format!("subseq exhaustive (|p|<={max_pattern_len}, |w|<={max_word_len}, sigma={})", alphabet.len()),
        cases: 0,
        disagreements: Vec::new(),
    };
    for len in 1..=max_pattern_len {
        for pattern in oracle::enumerate_patterns(len, alphabet, &PatternClass::All)? {
            for constraints in all_gap_tuples(bound_pairs, len - 1) {
                let cp = ConstrainedPattern::new(pattern.clone(), constraints)?;
                for w in &words {
                    report.cases += 1;
                    let main = subseq::match_subseq(w, &cp).matched;
                    let brute = oracle::brute_match_subseq_over(w, &cp, Some(alphabet))?;
                    if main != brute {
                        report.disagreements.push(Disagreement {
                            case: render_subseq_case(w, &cp, alphabet),
                            main,
                            oracle: brute,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Exhaustive classical agreement: every pattern up to `max_pattern_len`,
/// every word up to `max_word_len`.
pub fn angluin_exhaustive_sweep(alphabet: &Alphabet, max_pattern_len: usize, max_word_len: usize) -> Result<SweepReport> {
    let words = all_words(alphabet, max_word_len);
    let mut report = SweepReport {
        label: format!("angluin exhaustive (|p|<={max_pattern_len}, |w|<={max_word_len}, sigma={})", alphabet.len()),
        cases: 0,
        disagreements: Vec::new(),
    };
    for len in 1..=max_pattern_len {
        for pattern in oracle::enumerate_patterns(len, alphabet, &PatternClass::All)? {
            for w in &words {
                report.cases += 1;
                let main = angluin::member(w, &pattern).matched;
                let brute = oracle::brute_member_angluin(w, &pattern)?;
                if main != brute {
                    report.disagreements.push(Disagreement {
                        case: format!("w={} p={}", render_word_text(w, alphabet), pattern.render(alphabet)),
                        main,
                        oracle: brute,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Seeded random subsequence agreement at the oracle's size caps
/// (|w| <= 12, |p| <= 5, <= 3 distinct variables, bounds from {0,1,2,inf}).
pub fn subseq_random_sweep(seed: u64, cases: usize) -> Result<SweepReport> {
    if cases == 0 {
        return Err(Error::EmptySweep);
    }
    let alphabet = Alphabet::chars("abc").unwrap();
    let mut rng = SplitMix64::new(seed);
    let mut report = SweepReport {
        label: format!("subseq random (seed={seed}, cases={cases})"),
        cases,
        disagreements: Vec::new(),
    };
    for _ in 0..cases {
        let w = random_word(&mut rng, &alphabet, 12);
        let cp = random_constrained_pattern(&mut rng, &alphabet, 5, 3);
        let main = subseq::match_subseq(&w, &cp).matched;
        let brute = oracle::brute_match_subseq_over(&w, &cp, Some(&alphabet))?;
        if main != brute {
            report.disagreements.push(Disagreement {
                case: render_subseq_case(&w, &cp, &alphabet),
                main,
                oracle: brute,
            });
        }
    }
    Ok(report)
}

/// Seeded random classical agreement at the oracle's size caps
/// (|w| <= 10, <= 4 distinct variables).
pub fn angluin_random_sweep(seed: u64, cases: usize) -> Result<SweepReport> {
    if cases == 0 {
        return Err(Error::EmptySweep);
    }
    let alphabet = Alphabet::chars("ab").unwrap();
    let mut rng = SplitMix64::new(seed);
    let mut report = SweepReport {
        label: format!("angluin random (seed={seed}, cases={cases})"),
        cases,
        disagreements: Vec::new(),
    };
    for _ in 0..cases {
        let w = random_word(&mut rng, &alphabet, 10);
        let p = random_pattern(&mut rng, &alphabet, 5, 4);
        let main = angluin::member(&w, &p).matched;
        let brute = oracle::brute_member_angluin(&w, &p)?;
        if main != brute {
            report.disagreements.push(Disagreement {
                case: format!("w={} p={}", render_word_text(&w, &alphabet), p.render(&alphabet)),
                main,
                oracle: brute,
            });
        }
    }
    Ok(report)
}

/// Constraint-widening monotonicity: builds a matching (word, pattern) pair
/// by reading an embedding off the word, widens one bound, and checks the
/// match cannot disappear. Uses the fast matcher only.
pub fn widening_random_sweep(seed: u64, cases: usize) -> Result<SweepReport> {
    if cases == 0 {
        return Err(Error::EmptySweep);
    }
    let alphabet = Alphabet::chars("abc").unwrap();
    let mut rng = SplitMix64::new(seed);
    let mut report = SweepReport {
        label: format!("widening monotonicity (seed={seed}, cases={cases})"),
        cases,
        disagreements: Vec::new(),
    };
    for _ in 0..cases {
        let w = random_word(&mut rng, &alphabet, 10);
        let cp = random_matching_pattern(&mut rng, &alphabet, &w);
        debug_assert!(subseq::match_subseq(&w, &cp).matched);
        let widened = widen_one_bound(&mut rng, &cp);
        if !subseq::match_subseq(&w, &widened).matched {
            report.disagreements.push(Disagreement {
                case: format!(
                    "{} then widened to {}",
                    render_subseq_case(&w, &cp, &alphabet),
                    widened.constraints()
                ),
                main: false,
                oracle: true,
            });
        }
    }
    Ok(report)
}

/// The exhaustive suite: subsequence and classical agreement at tiny sizes.
pub fn tiny_suite() -> Result<Vec<SweepReport>> {
    let ab = Alphabet::chars("ab").unwrap();
    Ok(vec![
        subseq_exhaustive_sweep(&ab, 3, &tiny_bound_pairs(), 6)?,
        angluin_exhaustive_sweep(&ab, 4, 6)?,
    ])
}

/// The seeded random suite: subsequence and classical agreement at the
/// oracle caps, `cases` of each.
pub fn random_suite(seed: u64, cases: usize) -> Result<Vec<SweepReport>> {
    Ok(vec![subseq_random_sweep(seed, cases)?, angluin_random_sweep(seed, cases)?])
}

pub fn random_word(rng: &mut SplitMix64, alphabet: &Alphabet, max_len: usize) -> Word {
    let symbols: Vec<Symbol> = alphabet.symbols().collect();
    let len = 1 + rng.below(max_len);
    (0..len).map(|_| symbols[rng.below(symbols.len())]).collect()
}

/// Random pattern with a cap on distinct variables; fresh variables are
/// introduced in canonical order.
pub fn random_pattern(rng: &mut SplitMix64, alphabet: &Alphabet, max_len: usize, max_vars: usize) -> Pattern {
    let symbols: Vec<Symbol> = alphabet.symbols().collect();
    let len = 1 + rng.below(max_len);
    let mut used = 0usize;
    let items = (0..len)
        .map(|_| {
            if max_vars > 0 && rng.chance(2, 5) {
                // 0..used picks an existing variable, used picks a fresh one
                let pick = rng.below((used + 1).min(max_vars));
                if pick == used {
                    used += 1;
                }
                PatternItem::Var(Variable::new(pick + 1))
            } else {
                PatternItem::Terminal(symbols[rng.below(symbols.len())])
            }
        })
        .collect();
    Pattern::new(items).expect("len >= 1")
}

pub fn random_constrained_pattern(
    rng: &mut SplitMix64,
    alphabet: &Alphabet,
    max_len: usize,
    max_vars: usize,
) -> ConstrainedPattern {
    let pattern = random_pattern(rng, alphabet, max_len, max_vars);
    let constraints = random_gap_constraints(rng, pattern.len() - 1);
    ConstrainedPattern::new(pattern, constraints).expect("arity by construction")
}

pub fn random_gap_constraints(rng: &mut SplitMix64, arity: usize) -> GapConstraints {
    let bounds = (0..arity)
        .map(|_| {
            let lo = rng.below(3);
            let hi = if rng.chance(1, 4) { None } else { Some(lo + rng.below(3)) };
            GapBound::new(lo, hi).expect("lo <= hi")
        })
        .collect();
    GapConstraints::new(bounds)
}

/// Builds a constrained pattern from a random embedding into the word, so it
/// is guaranteed to match: pattern symbols are read off the chosen
/// positions (some replaced by variables), bounds bracket the actual gaps.
pub fn random_matching_pattern(rng: &mut SplitMix64, alphabet: &Alphabet, word: &Word) -> ConstrainedPattern {
    let len = 1 + rng.below(word.len().min(4));
    // strictly increasing positions, 0-based
    let mut positions: Vec<usize> = Vec::new();
    let mut next = 0usize;
    for remaining in (1..=len).rev() {
        let latest = word.len() - remaining;
        let pos = next + rng.below(latest - next + 1);
        positions.push(pos);
        next = pos + 1;
    }
    // variables repeat only where the underlying symbols agree
    let mut var_for_symbol: Vec<Option<Variable>> = vec![None; alphabet.len()];
    let mut used = 0usize;
    let items: Vec<PatternItem> = positions
        .iter()
        .map(|&pos| {
            let sym = word[pos];
            if rng.chance(1, 3) {
                let var = *var_for_symbol[sym.index()].get_or_insert_with(|| {
                    used += 1;
                    Variable::new(used)
                });
                PatternItem::Var(var)
            } else {
                PatternItem::Terminal(sym)
            }
        })
        .collect();
    let bounds: Vec<GapBound> = positions
        .windows(2)
        .map(|pair| {
            let gap = pair[1] - pair[0] - 1;
            let lo = gap.saturating_sub(rng.below(2));
            let hi = if rng.chance(1, 4) { None } else { Some(gap + rng.below(2)) };
            GapBound::new(lo, hi).expect("brackets the gap")
        })
        .collect();
    ConstrainedPattern::new(Pattern::new(items).expect("len >= 1"), GapConstraints::new(bounds))
        .expect("bounds per gap")
}

fn widen_one_bound(rng: &mut SplitMix64, cp: &ConstrainedPattern) -> ConstrainedPattern {
    let mut bounds: Vec<GapBound> = cp.constraints().bounds().to_vec();
    if bounds.is_empty() {
        return cp.clone();
    }
    let idx = rng.below(bounds.len());
    let b = bounds[idx];
    bounds[idx] = match rng.below(3) {
        0 if b.lo() > 0 => GapBound::new(b.lo() - 1, b.hi()).unwrap(),
        1 => GapBound::new(b.lo(), b.hi().map(|h| h + 1)).unwrap(),
        _ => GapBound::new(b.lo(), None).unwrap(),
    };
    ConstrainedPattern::new(cp.pattern().clone(), GapConstraints::new(bounds)).expect("same arity")
}

fn render_word_text(word: &Word, alphabet: &Alphabet) -> String {
    crate::sample::render_word(word, alphabet)
}

fn render_subseq_case(word: &Word, cp: &ConstrainedPattern, alphabet: &Alphabet) -> String {
    format!(
        "w={} p={} C={}",
        render_word_text(word, alphabet),
        cp.pattern().render(alphabet),
        cp.constraints()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn all_words_counts() {
        let ab = Alphabet::chars("ab").unwrap();
        assert_eq!(all_words(&ab, 3).len(), 2 + 4 + 8);
    }

    #[test]
    fn gap_tuple_enumeration_counts() {
        let pairs = tiny_bound_pairs();
        assert_eq!(all_gap_tuples(&pairs, 0).len(), 1);
        assert_eq!(all_gap_tuples(&pairs, 2).len(), 25);
    }

    #[test]
    fn small_sweeps_agree() {
        let ab = Alphabet::chars("ab").unwrap();
        let subseq = subseq_exhaustive_sweep(&ab, 2, &tiny_bound_pairs(), 4).unwrap();
        assert!(subseq.passed(), "{:?}", subseq.disagreements.first());
        let angluin = angluin_exhaustive_sweep(&ab, 2, 4).unwrap();
        assert!(angluin.passed(), "{:?}", angluin.disagreements.first());
    }

    #[test]
    fn random_sweeps_replay_from_seed() {
        let a = subseq_random_sweep(7, 200).unwrap();
        let b = subseq_random_sweep(7, 200).unwrap();
        assert!(a.passed(), "{:?}", a.disagreements.first());
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.disagreements.len(), b.disagreements.len());
    }

    #[test]
    fn zero_cases_is_rejected() {
        assert!(matches!(subseq_random_sweep(1, 0), Err(Error::EmptySweep)));
        assert!(matches!(widening_random_sweep(1, 0), Err(Error::EmptySweep)));
    }

    #[test]
    fn constructed_matching_patterns_do_match() {
        let alphabet = Alphabet::chars("abc").unwrap();
        let mut rng = SplitMix64::new(3);
        for _ in 0..200 {
            let w = random_word(&mut rng, &alphabet, 10);
            let cp = random_matching_pattern(&mut rng, &alphabet, &w);
            assert!(subseq::match_subseq(&w, &cp).matched);
        }
    }
}

//! Brute-force reference implementations: deliberately simple, obviously
//! correct, exponential. These share only the syntactic types with the fast
//! matchers, never their search logic, so agreement between the two is
//! meaningful evidence. Hard size guards reject inputs that would run
//! forever.

use crate::error::{Error, Result};
use crate::inclusion;
use crate::pattern::{Alphabet, ConstrainedPattern, Pattern, PatternItem, Symbol, Variable};
use crate::ratio::Ratio;
use crate::sample::Sample;

const MEMBER_MAX_WORD: usize = 10;
const MEMBER_MAX_VARS: usize = 4;
const SUBSEQ_MAX_WORD: usize = 16;
const SUBSEQ_MAX_PATTERN: usize = 5;
const SUBSEQ_MAX_VARS: usize = 3;
const ENUM_MAX_LEN: usize = 4;
const ENUM_MAX_ALPHABET: usize = 3;

/// Classical membership by enumerating integer compositions of |w| across
/// the pattern items (terminals take length 1, variable occurrences any
/// length >= 1) and comparing the induced slices.
pub fn brute_member_angluin(word: &[Symbol], pattern: &Pattern) -> Result<bool> {
    if word.len() > MEMBER_MAX_WORD {
        return Err(Error::SizeGuard { what: "brute membership word length", limit: MEMBER_MAX_WORD, got: word.len() });
    }
    let vars = pattern.distinct_var_count();
    if vars > MEMBER_MAX_VARS {
        return Err(Error::SizeGuard { what: "brute membership distinct variables", limit: MEMBER_MAX_VARS, got: vars });
    }

    // try every composition; a composition succeeds when terminals cover
    // their own symbol and all slices of one variable are identical
    fn check(items: &[PatternItem], word: &[Symbol], from: usize, cuts: &mut Vec<(usize, usize)>) -> bool {
        if items.len() == cuts.len() {
            debug_assert_eq!(from, cuts.last().map(|c| c.1).unwrap_or(0));
            if from != word.len() {
                return false;
            }
            let mut images: Vec<(Variable, &[Symbol])> = Vec::new();
            for (item, &(a, b)) in items.iter().zip(cuts.iter()) {
                match item {
                    PatternItem::Terminal(s) => {
                        if word[a..b] != [*s] {
                            return false;
                        }
                    }
                    PatternItem::Var(v) => match images.iter().find(|(u, _)| u == v) {
                        Some((_, image)) => {
                            if *image != &word[a..b] {
                                return false;
                            }
                        }
                        None => images.push((*v, &word[a..b])),
                    },
                }
            }
            return true;
        }
        let idx = cuts.len();
        let rest = items.len() - idx - 1;
        let max_len = word.len().saturating_sub(from).saturating_sub(rest);
        let lens: std::ops::RangeInclusive<usize> = match items[idx] {
            PatternItem::Terminal(_) => 1..=1,
            PatternItem::Var(_) => 1..=max_len,
        };
        for len in lens {
            if from + len > word.len() {
                break;
            }
            cuts.push((from, from + len));
            if check(items, word, from + len, cuts) {
                return true;
            }
            cuts.pop();
        }
        false
    }

    Ok(check(pattern.items(), word, 0, &mut Vec::new()))
}

/// Subsequence matching by exhausting every symbol assignment and every
/// strictly increasing position tuple, then checking symbols and gaps.
pub fn brute_match_subseq(word: &[Symbol], cp: &ConstrainedPattern) -> Result<bool> {
    brute_match_subseq_over(word, cp, None)
}

/// As [`brute_match_subseq`] but with an explicit alphabet for the variable
/// images (defaults to the symbols occurring in the word plus pattern
/// terminals, which is equivalent for matching).
pub fn brute_match_subseq_over(word: &[Symbol], cp: &ConstrainedPattern, alphabet: Option<&Alphabet>) -> Result<bool> {
    if word.len() > SUBSEQ_MAX_WORD {
        return Err(Error::SizeGuard { what: "brute subsequence word length", limit: SUBSEQ_MAX_WORD, got: word.len() });
    }
    if cp.len() > SUBSEQ_MAX_PATTERN {
        return Err(Error::SizeGuard { what: "brute subsequence pattern length", limit: SUBSEQ_MAX_PATTERN, got: cp.len() });
    }
    let vars = cp.pattern().variables();
    if vars.len() > SUBSEQ_MAX_VARS {
        return Err(Error::SizeGuard { what: "brute subsequence distinct variables", limit: SUBSEQ_MAX_VARS, got: vars.len() });
    }

    let universe: Vec<Symbol> = match alphabet {
        Some(a) => a.symbols().collect(),
        None => {
            let mut symbols: Vec<Symbol> = word.to_vec();
            for item in cp.pattern().items() {
                if let PatternItem::Terminal(s) = item {
                    symbols.push(*s);
                }
            }
            symbols.sort_unstable();
            symbols.dedup();
            symbols
        }
    };

    let mut images = vec![0usize; vars.len()];
    loop {
        // substituted symbol sequence under the current assignment
        let target: Vec<Symbol> = cp
            .pattern()
            .items()
            .iter()
            .map(|item| match item {
                PatternItem::Terminal(s) => *s,
                PatternItem::Var(v) => {
                    let slot = vars.iter().position(|u| u == v).unwrap();
                    universe[images[slot]]
                }
            })
            .collect();
        if any_embedding(word, &target, cp) {
            return Ok(true);
        }
        let mut slot = vars.len();
        loop {
            if slot == 0 {
                return Ok(false);
            }
            slot -= 1;
            images[slot] += 1;
            if images[slot] < universe.len() {
                break;
            }
            images[slot] = 0;
        }
    }
}

fn any_embedding(word: &[Symbol], target: &[Symbol], cp: &ConstrainedPattern) -> bool {
    fn rec(word: &[Symbol], target: &[Symbol], cp: &ConstrainedPattern, next: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == target.len() {
            return true;
        }
        let j = chosen.len();
        for pos in next..=word.len() {
            if word[pos - 1] != target[j] {
                continue;
            }
            if j > 0 {
                let gap = pos - chosen[j - 1] - 1;
                if !cp.constraints().bounds()[j - 1].admits(gap) {
                    continue;
                }
            }
            chosen.push(pos);
            if rec(word, target, cp, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(word, target, cp, 1, &mut Vec::new())
}

/// All canonical patterns of the given length over the alphabet that belong
/// to the class: at each position, terminals in alphabet order, then
/// variables up to the next unused index. No duplicates up to renaming.
pub fn enumerate_patterns(length: usize, alphabet: &Alphabet, cls: &crate::classes::PatternClass) -> Result<Vec<Pattern>> {
    if length == 0 {
        return Err(Error::EmptyPattern);
    }
    if length > ENUM_MAX_LEN {
        return Err(Error::SizeGuard { what: "pattern enumeration length", limit: ENUM_MAX_LEN, got: length });
    }
    if alphabet.len() > ENUM_MAX_ALPHABET {
        return Err(Error::SizeGuard { what: "pattern enumeration alphabet", limit: ENUM_MAX_ALPHABET, got: alphabet.len() });
    }

    fn rec(
        length: usize,
        alphabet: &Alphabet,
        cls: &crate::classes::PatternClass,
        items: &mut Vec<PatternItem>,
        max_var: usize,
        out: &mut Vec<Pattern>,
    ) {
        if items.len() == length {
            let p = Pattern::new(items.clone()).expect("length >= 1");
            if cls.contains(&p) {
                out.push(p);
            }
            return;
        }
        for s in alphabet.symbols() {
            items.push(PatternItem::Terminal(s));
            rec(length, alphabet, cls, items, max_var, out);
            items.pop();
        }
        for v in 1..=max_var + 1 {
            items.push(PatternItem::Var(Variable::new(v)));
            rec(length, alphabet, cls, items, max_var.max(v), out);
            items.pop();
        }
    }

    let mut out = Vec::new();
    rec(length, alphabet, cls, &mut Vec::new(), 0, &mut out);
    Ok(out)
}

fn brute_support(sample: &Sample, cp: &ConstrainedPattern) -> Result<Ratio> {
    let mut matched = 0u64;
    for w in sample.words() {
        if brute_match_subseq_over(w, cp, Some(sample.alphabet()))? {
            matched += 1;
        }
    }
    Ok(Ratio::new(matched, sample.len() as u64))
}

/// Descriptiveness by exhaustion: the pattern is in the class, meets the
/// threshold, and no enumerated class member with sufficient support has a
/// strictly smaller language under the same constraints.
pub fn brute_descriptive(
    cp: &ConstrainedPattern,
    sample: &Sample,
    threshold: Ratio,
    cls: &crate::classes::PatternClass,
) -> Result<bool> {
    if !cls.contains(cp.pattern()) {
        return Ok(false);
    }
    if brute_support(sample, cp)? < threshold {
        return Ok(false);
    }
    for beta in enumerate_patterns(cp.len(), sample.alphabet(), cls)? {
        let candidate = ConstrainedPattern::new(beta, cp.constraints().clone()).expect("same arity");
        if brute_support(sample, &candidate)? >= threshold
            && inclusion::strictly_included_subseq(&candidate, cp).expect("equal shape")
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classical descriptiveness by exhaustion: full containment of the sample
/// and no equal-length class member with a strictly smaller language that
/// still contains the sample.
pub fn brute_descriptive_classic(pattern: &Pattern, sample: &Sample, cls: &crate::classes::PatternClass) -> Result<bool> {
    if !cls.contains(pattern) {
        return Ok(false);
    }
    for w in sample.words() {
        if !brute_member_angluin(w, pattern)? {
            return Ok(false);
        }
    }
    for beta in enumerate_patterns(pattern.len(), sample.alphabet(), cls)? {
        let mut contains_sample = true;
        for w in sample.words() {
            if !brute_member_angluin(w, &beta)? {
                contains_sample = false;
                break;
            }
        }
        if contains_sample && inclusion::strictly_included(&beta, pattern).expect("equal length") {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::PatternClass;
    use crate::pattern::GapConstraints;

    fn word(text: &str, a: &Alphabet) -> Vec<Symbol> {
        text.chars().map(|c| a.lookup(&c.to_string()).unwrap()).collect()
    }

    #[test]
    fn brute_member_examples() {
        let a = Alphabet::chars("abc").unwrap();
        // x1 -> b, x2 -> c gives babcba; the running example word exceeds the
        // |w| <= 10 guard, so a same-shape instance stands in here
        let p = Pattern::parse("$1 a b $2 $1 a", &a).unwrap();
        assert!(brute_member_angluin(&word("babcba", &a), &p).unwrap());
        assert!(!brute_member_angluin(&word("babcbb", &a), &p).unwrap());
        let sq = Pattern::parse("$1 $1", &a).unwrap();
        assert!(brute_member_angluin(&word("aa", &a), &sq).unwrap());
        assert!(!brute_member_angluin(&word("ab", &a), &sq).unwrap());
    }

    #[test]
    fn brute_member_guards() {
        let a = Alphabet::chars("ab").unwrap();
        let p = Pattern::parse("$1", &a).unwrap();
        let long = word("abababababab", &a);
        assert!(matches!(brute_member_angluin(&long, &p), Err(Error::SizeGuard { .. })));
        let wide = Pattern::parse("$1 $2 $3 $4 $5", &a).unwrap();
        assert!(matches!(brute_member_angluin(&word("ab", &a), &wide), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn brute_subseq_examples() {
        let a = Alphabet::chars("abc").unwrap();
        let cp = ConstrainedPattern::new(
            Pattern::parse("a $1 b $1", &a).unwrap(),
            GapConstraints::parse("1-3,4-4,2-3").unwrap(),
        )
        .unwrap();
        assert!(brute_match_subseq(&word("aabacabcbbacc", &a), &cp).unwrap());
        let single = ConstrainedPattern::new(Pattern::parse("$1", &a).unwrap(), GapConstraints::default()).unwrap();
        assert!(brute_match_subseq(&word("a", &a), &single).unwrap());
        let term = ConstrainedPattern::new(Pattern::parse("a", &a).unwrap(), GapConstraints::default()).unwrap();
        assert!(!brute_match_subseq(&word("b", &a), &term).unwrap());
    }

    #[test]
    fn enumeration_counts_and_order() {
        let ab = Alphabet::chars("ab").unwrap();
        let a1 = Alphabet::chars("a").unwrap();

        let len1 = enumerate_patterns(1, &ab, &PatternClass::All).unwrap();
        let rendered: Vec<String> = len1.iter().map(|p| p.render(&ab)).collect();
        assert_eq!(rendered, vec!["a", "b", "$1"]);

        let len2 = enumerate_patterns(2, &a1, &PatternClass::All).unwrap();
        let rendered: Vec<String> = len2.iter().map(|p| p.render(&a1)).collect();
        assert_eq!(rendered, vec!["a a", "a $1", "$1 a", "$1 $1", "$1 $2"]);

        let regular = enumerate_patterns(2, &a1, &PatternClass::Regular).unwrap();
        assert_eq!(regular.len(), 4);
    }

    #[test]
    fn enumeration_matches_counting_formula() {
        // sum over terminal position choices of sigma^k * Bell(len - k)
        let expected = [((1usize, 1usize), 2usize), ((1, 2), 3), ((2, 1), 5), ((2, 2), 10), ((3, 2), 37)];
        for ((len, sigma), count) in expected {
            let alphabet = Alphabet::chars(&"abc"[..sigma]).unwrap();
            let all = enumerate_patterns(len, &alphabet, &PatternClass::All).unwrap();
            assert_eq!(all.len(), count, "len {len} sigma {sigma}");
            // canonical forms, no duplicates up to renaming
            for p in &all {
                assert!(p.is_canonical());
            }
        }
    }

    #[test]
    fn brute_descriptive_on_the_worked_sample() {
        let a = Alphabet::chars("abc").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abc", "acb", "abcb"]).unwrap();
        let c = GapConstraints::parse("0-5").unwrap();
        let ab = ConstrainedPattern::new(Pattern::parse("a b", &a).unwrap(), c.clone()).unwrap();
        assert!(brute_descriptive(&ab, &s, Ratio::ONE, &PatternClass::All).unwrap());
        let general = ConstrainedPattern::new(Pattern::parse("$1 $2", &a).unwrap(), c.clone()).unwrap();
        assert!(!brute_descriptive(&general, &s, Ratio::ONE, &PatternClass::All).unwrap());
        // below threshold fails the first clause
        let aa = ConstrainedPattern::new(Pattern::parse("a a", &a).unwrap(), c).unwrap();
        assert!(!brute_descriptive(&aa, &s, Ratio::ONE, &PatternClass::All).unwrap());
    }
}

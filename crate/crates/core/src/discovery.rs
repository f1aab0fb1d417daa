//! Greedy refinement discovery of descriptive patterns.
//!
//! Both algorithms start from a most general pattern and visit positions one
//! by one, trying to replace the variable there by a terminal or by an
//! already-kept variable; a replacement is kept as soon as the refined
//! pattern stays in the class and still covers enough of the sample. Every
//! accepted step shrinks the language, so the run walks a chain
//! L(a1) ⊇ L(a2) ⊇ ... down to a pattern that is descriptive: no class
//! member with sufficient support has a strictly smaller language.
//!
//! The classical variant fixes left-to-right order and takes the terminal
//! candidate at position i from a shortest sample word; the subsequence
//! variant visits positions in any configured order, tries every alphabet
//! symbol, and accepts against a support threshold instead of full
//! containment. Started from an arbitrary pattern, the run returns a
//! descriptive pattern at least as specific; a run that changes nothing
//! certifies that its start was descriptive already.

use std::fmt;

use crate::angluin;
use crate::classes::PatternClass;
use crate::error::{Error, Result};
use crate::pattern::{ConstrainedPattern, GapConstraints, Pattern, PatternItem, Symbol, Variable};
use crate::ratio::Ratio;
use crate::sample::Sample;
use crate::subseq;
use crate::sweeps::SplitMix64;

/// Order in which pattern positions are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionOrder {
    LeftToRight,
    RightToLeft,
    SeededRandom(u64),
}

impl PositionOrder {
    pub fn parse(text: &str) -> Result<PositionOrder> {
        match text.trim() {
            "l2r" => Ok(PositionOrder::LeftToRight),
            "r2l" => Ok(PositionOrder::RightToLeft),
            other => match other.strip_prefix("random:") {
                Some(seed) => seed
                    .parse()
                    .map(PositionOrder::SeededRandom)
                    .map_err(|_| Error::BadStrategySpec(text.to_string())),
                None => Err(Error::BadStrategySpec(text.to_string())),
            },
        }
    }

    fn visit_order(&self, len: usize) -> Vec<usize> {
        match self {
            PositionOrder::LeftToRight => (0..len).collect(),
            PositionOrder::RightToLeft => (0..len).rev().collect(),
            PositionOrder::SeededRandom(seed) => {
                let mut order: Vec<usize> = (0..len).collect();
                let mut rng = SplitMix64::new(*seed);
                for i in (1..order.len()).rev() {
                    let j = rng.below(i + 1);
                    order.swap(i, j);
                }
                order
            }
        }
    }
}

impl fmt::Display for PositionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositionOrder::LeftToRight => write!(f, "l2r"),
            PositionOrder::RightToLeft => write!(f, "r2l"),
            PositionOrder::SeededRandom(seed) => write!(f, "random:{seed}"),
        }
    }
}

/// Order in which replacement candidates are tried at a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOrder {
    TerminalsThenVars,
    VarsThenTerminals,
}

impl CandidateOrder {
    pub fn parse(text: &str) -> Result<CandidateOrder> {
        match text.trim() {
            "terms-first" => Ok(CandidateOrder::TerminalsThenVars),
            "vars-first" => Ok(CandidateOrder::VarsThenTerminals),
            other => Err(Error::BadStrategySpec(other.to_string())),
        }
    }
}

impl fmt::Display for CandidateOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateOrder::TerminalsThenVars => write!(f, "terms-first"),
            CandidateOrder::VarsThenTerminals => write!(f, "vars-first"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strategy {
    pub position_order: PositionOrder,
    pub candidate_order: CandidateOrder,
}

impl Default for Strategy {
    fn default() -> Strategy {
        Strategy {
            position_order: PositionOrder::LeftToRight,
            candidate_order: CandidateOrder::TerminalsThenVars,
        }
    }
}

/// Full configuration of a subsequence discovery run.
#[derive(Debug, Clone)]
pub struct DiscoveryConfig {
    pub length: usize,
    pub constraints: GapConstraints,
    pub threshold: Ratio,
    pub class: PatternClass,
    pub strategy: Strategy,
    pub start: Option<ConstrainedPattern>,
}

impl DiscoveryConfig {
    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::ZeroPatternLength);
        }
        if self.constraints.len() != self.length - 1 {
            return Err(Error::GapArity { pattern_len: self.length, bounds_len: self.constraints.len() });
        }
        if self.threshold <= Ratio::ZERO || self.threshold > Ratio::ONE {
            return Err(Error::ThresholdRange(self.threshold));
        }
        if let Some(start) = &self.start {
            if start.len() != self.length {
                return Err(Error::StartShape { expected_len: self.length, got_len: start.len() });
            }
            if start.constraints() != &self.constraints {
                return Err(Error::StartConstraints);
            }
        }
        Ok(())
    }
}

/// One tried replacement at one position. Support is not evaluated when the
/// class check already rejected the candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateAttempt {
    pub candidate: PatternItem,
    pub in_class: bool,
    pub support: Option<Ratio>,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    Accepted(PatternItem),
    KeptVariable,
}

/// Record of one visited position holding a still-unprocessed variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementStep {
    /// 1-based pattern position.
    pub position: usize,
    /// The variable that was up for replacement.
    pub variable: Variable,
    pub attempts: Vec<CandidateAttempt>,
    pub outcome: StepOutcome,
    /// Support of the pattern after this step.
    pub support: Ratio,
    pub snapshot: Pattern,
}

/// The chain of patterns a run walked through. Consecutive snapshots are
/// always related by a pattern substitution, so languages shrink step by
/// step; this is the artifact's explainability and test surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementTrace {
    pub start: Pattern,
    pub initial_support: Ratio,
    pub steps: Vec<RefinementStep>,
}

impl RefinementTrace {
    /// Start pattern followed by the snapshot after every step.
    pub fn snapshots(&self) -> Vec<&Pattern> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|s| &s.snapshot))
            .collect()
    }
}

struct Engine<'a> {
    class: &'a PatternClass,
    threshold: Ratio,
    candidate_order: CandidateOrder,
    terminal_candidates: &'a dyn Fn(usize) -> Vec<Symbol>,
    support_of: &'a dyn Fn(&Pattern) -> Ratio,
}

impl Engine<'_> {
    fn run(&self, start: Pattern, positions: &[usize]) -> (Pattern, RefinementTrace) {
        let mut current = start.clone();
        let mut kept: Vec<Variable> = Vec::new();
        let mut processed: Vec<Variable> = Vec::new();
        let mut steps = Vec::new();
        let initial_support = (self.support_of)(&current);
        let mut current_support = initial_support;

        for &pos in positions {
            let PatternItem::Var(var) = current.items()[pos] else {
                continue; // terminal position, nothing to refine
            };
            if processed.contains(&var) {
                continue; // variable already decided at another position
            }
            processed.push(var);

            let terminals: Vec<PatternItem> = (self.terminal_candidates)(pos)
                .into_iter()
                .map(PatternItem::Terminal)
                .collect();
            let variables: Vec<PatternItem> = kept.iter().map(|&v| PatternItem::Var(v)).collect();
            let candidates: Vec<PatternItem> = match self.candidate_order {
                CandidateOrder::TerminalsThenVars => terminals.into_iter().chain(variables).collect(),
                CandidateOrder::VarsThenTerminals => variables.into_iter().chain(terminals).collect(),
            };

            let mut attempts = Vec::new();
            let mut accepted: Option<(PatternItem, Pattern, Ratio)> = None;
            for candidate in candidates {
                let refined = current.replace_var(var, candidate);
                let in_class = self.class.contains(&refined);
                let support = in_class.then(|| (self.support_of)(&refined));
                let ok = in_class && support.expect("evaluated when in class") >= self.threshold;
                attempts.push(CandidateAttempt { candidate, in_class, support, accepted: ok });
                if ok {
                    accepted = Some((candidate, refined, support.unwrap()));
                    break;
                }
            }

            let (outcome, support) = match accepted {
                Some((candidate, refined, support)) => {
                    current = refined;
                    current_support = support;
                    (StepOutcome::Accepted(candidate), support)
                }
                None => {
                    kept.push(var);
                    (StepOutcome::KeptVariable, current_support)
                }
            };
            steps.push(RefinementStep {
                position: pos + 1,
                variable: var,
                attempts,
                outcome,
                support,
                snapshot: current.clone(),
            });
        }

        let trace = RefinementTrace { start, initial_support, steps };
        (current, trace)
    }
}

/// Shinohara's algorithm under classical (word-valued, full containment)
/// semantics: starts from the most general pattern of the shortest word's
/// length, left to right, with that word's own symbol as the terminal
/// candidate at each position. The result contains the sample, lies in the
/// class, and is descriptive within it.
pub fn shinohara_classic(sample: &Sample, class: &PatternClass) -> Result<(Pattern, RefinementTrace)> {
    let witness = sample.shortest_word().clone();
    let start = Pattern::all_variables(witness.len())?;
    if !class.contains(&start) {
        return Err(Error::NotInClass {
            pattern: start.render(sample.alphabet()),
            class: class.to_string(),
        });
    }
    let support_of = |p: &Pattern| {
        let matched = sample.words().iter().filter(|w| angluin::member(w, p).matched).count();
        Ratio::new(matched as u64, sample.len() as u64)
    };
    let terminal_candidates = |pos: usize| vec![witness[pos]];
    let engine = Engine {
        class,
        threshold: Ratio::ONE,
        candidate_order: CandidateOrder::TerminalsThenVars,
        terminal_candidates: &terminal_candidates,
        support_of: &support_of,
    };
    let positions: Vec<usize> = (0..witness.len()).collect();
    Ok(engine.run(start, &positions))
}

/// The generalized algorithm for gap-constrained subsequence patterns.
pub fn discover_subseq(sample: &Sample, cfg: &DiscoveryConfig) -> Result<(ConstrainedPattern, RefinementTrace)> {
    cfg.validate()?;
    let start = match &cfg.start {
        Some(cp) => cp.pattern().clone(),
        None => Pattern::all_variables(cfg.length)?,
    };
    if !cfg.class.contains(&start) {
        return Err(Error::NotInClass {
            pattern: start.render(sample.alphabet()),
            class: cfg.class.to_string(),
        });
    }
    let constraints = cfg.constraints.clone();
    let support_of = |p: &Pattern| {
        let cp = ConstrainedPattern::new(p.clone(), constraints.clone()).expect("arity preserved by refinement");
        subseq::support(sample, &cp)
    };
    let initial = support_of(&start);
    if initial < cfg.threshold {
        return Err(Error::InitialSupport { achieved: initial, required: cfg.threshold });
    }
    let alphabet_symbols: Vec<Symbol> = sample.alphabet().symbols().collect();
    let terminal_candidates = |_pos: usize| alphabet_symbols.clone();
    let engine = Engine {
        class: &cfg.class,
        threshold: cfg.threshold,
        candidate_order: cfg.strategy.candidate_order,
        terminal_candidates: &terminal_candidates,
        support_of: &support_of,
    };
    let positions = cfg.strategy.position_order.visit_order(cfg.length);
    let (pattern, trace) = engine.run(start, &positions);
    Ok((ConstrainedPattern::new(pattern, cfg.constraints.clone())?, trace))
}

/// A pattern is descriptive iff a discovery run started from it comes back
/// unchanged (up to canonical renaming).
pub fn is_descriptive(cp: &ConstrainedPattern, sample: &Sample, cfg: &DiscoveryConfig) -> Result<bool> {
    if cp.len() != cfg.length {
        return Err(Error::StartShape { expected_len: cfg.length, got_len: cp.len() });
    }
    if cp.constraints() != &cfg.constraints {
        return Err(Error::StartConstraints);
    }
    if !cfg.class.contains(cp.pattern()) {
        return Err(Error::NotInClass {
            pattern: cp.pattern().render(sample.alphabet()),
            class: cfg.class.to_string(),
        });
    }
    let mut rerun = cfg.clone();
    rerun.start = Some(cp.clone());
    let (out, _) = discover_subseq(sample, &rerun)?;
    Ok(out.pattern().canonicalize() == cp.pattern().canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Alphabet;

    fn config(length: usize, gaps: &str, threshold: Ratio, class: PatternClass) -> DiscoveryConfig {
        DiscoveryConfig {
            length,
            constraints: GapConstraints::parse(gaps).unwrap(),
            threshold,
            class,
            strategy: Strategy::default(),
            start: None,
        }
    }

    #[test]
    fn shinohara_on_the_two_word_sample() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abb", "abab"]).unwrap();
        let (p, trace) = shinohara_classic(&s, &PatternClass::All).unwrap();
        assert_eq!(p.canonicalize().render(&a), "a b $1");
        assert_eq!(trace.steps.len(), 3);
        assert!(matches!(trace.steps[2].outcome, StepOutcome::KeptVariable));
    }

    #[test]
    fn shinohara_singleton_sample_spells_the_word() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abba"]).unwrap();
        let (p, _) = shinohara_classic(&s, &PatternClass::All).unwrap();
        assert_eq!(p.render(&a), "a b b a");
    }

    #[test]
    fn shinohara_crossing_words_keep_all_variables() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["ab", "ba"]).unwrap();
        let (p, _) = shinohara_classic(&s, &PatternClass::All).unwrap();
        assert_eq!(p.canonicalize().render(&a), "$1 $2");
    }

    #[test]
    fn discovery_worked_example_full_support() {
        let a = Alphabet::chars("abc").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abc", "acb", "abcb"]).unwrap();
        let cfg = config(2, "0-5", Ratio::ONE, PatternClass::All);
        let (cp, trace) = discover_subseq(&s, &cfg).unwrap();
        assert_eq!(cp.pattern().render(&a), "a b");
        // position 1 accepts a; position 2 rejects a, accepts b
        assert!(matches!(trace.steps[0].outcome, StepOutcome::Accepted(_)));
        assert!(!trace.steps[1].attempts[0].accepted);
        assert!(trace.steps[1].attempts[1].accepted);
    }

    #[test]
    fn discovery_with_two_thirds_threshold_keeps_a_variable() {
        let a = Alphabet::chars("abc").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abc", "acb", "bcb"]).unwrap();
        let cfg = config(2, "0-0", Ratio::new(2, 3), PatternClass::All);
        let (cp, trace) = discover_subseq(&s, &cfg).unwrap();
        assert_eq!(cp.pattern().render(&a), "a $2");
        assert_eq!(trace.steps[1].support, Ratio::new(2, 3));
        assert!(matches!(trace.steps[1].outcome, StepOutcome::KeptVariable));
    }

    #[test]
    fn warm_start_at_a_descriptive_pattern_is_a_fixed_point() {
        let a = Alphabet::chars("abc").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abc", "acb", "abcb"]).unwrap();
        let mut cfg = config(2, "0-5", Ratio::ONE, PatternClass::All);
        let ab = ConstrainedPattern::new(Pattern::parse("a b", &a).unwrap(), cfg.constraints.clone()).unwrap();
        cfg.start = Some(ab.clone());
        let (out, trace) = discover_subseq(&s, &cfg).unwrap();
        assert_eq!(out, ab);
        // terminal positions mean no variable steps at all
        assert!(trace.steps.is_empty());
        assert!(is_descriptive(&ab, &s, &cfg).unwrap());
    }

    #[test]
    fn general_pattern_is_not_descriptive_on_the_worked_sample() {
        let a = Alphabet::chars("abc").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abc", "acb", "abcb"]).unwrap();
        let cfg = config(2, "0-5", Ratio::ONE, PatternClass::All);
        let general =
            ConstrainedPattern::new(Pattern::parse("$1 $2", &a).unwrap(), cfg.constraints.clone()).unwrap();
        assert!(!is_descriptive(&general, &s, &cfg).unwrap());
    }

    #[test]
    fn class_violating_start_is_rejected() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["aba"]).unwrap();
        let cfg = config(3, "0-1,0-1", Ratio::ONE, PatternClass::Regular);
        let repeat =
            ConstrainedPattern::new(Pattern::parse("$1 a $1", &a).unwrap(), cfg.constraints.clone()).unwrap();
        assert!(matches!(is_descriptive(&repeat, &s, &cfg), Err(Error::NotInClass { .. })));
    }

    #[test]
    fn initial_support_below_threshold_is_reported() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["ab"]).unwrap();
        // two symbols with a mandatory gap of 2 cannot fit in a 2-letter word
        let cfg = config(2, "2-2", Ratio::ONE, PatternClass::All);
        match discover_subseq(&s, &cfg) {
            Err(Error::InitialSupport { achieved, required }) => {
                assert_eq!(achieved, Ratio::new(0, 1));
                assert_eq!(required, Ratio::ONE);
            }
            other => panic!("expected initial support error, got {other:?}"),
        }
    }

    #[test]
    fn config_validation_catches_shape_errors() {
        let bad_arity = config(2, "0-1,0-1", Ratio::ONE, PatternClass::All);
        assert!(matches!(bad_arity.validate(), Err(Error::GapArity { .. })));
        let bad_threshold = config(2, "0-1", Ratio::new(3, 2), PatternClass::All);
        assert!(matches!(bad_threshold.validate(), Err(Error::ThresholdRange(_))));
        let zero_threshold = config(2, "0-1", Ratio::new(0, 5), PatternClass::All);
        assert!(matches!(zero_threshold.validate(), Err(Error::ThresholdRange(_))));
    }

    #[test]
    fn trace_snapshots_chain_by_substitution() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abab", "abba", "aabb"]).unwrap();
        let cfg = config(3, "0-2,0-2", Ratio::new(2, 3), PatternClass::All);
        let (_, trace) = discover_subseq(&s, &cfg).unwrap();
        let snaps = trace.snapshots();
        for pair in snaps.windows(2) {
            let h = crate::inclusion::find_substitution(pair[0], pair[1]).unwrap();
            assert!(h.is_some(), "{} -> {}", pair[0].render(&a), pair[1].render(&a));
        }
    }

    #[test]
    fn right_to_left_and_seeded_orders_also_produce_descriptive_output() {
        let a = Alphabet::chars("ab").unwrap();
        let s = Sample::from_char_words(a.clone(), &["abab", "abba", "aabb"]).unwrap();
        for order in [PositionOrder::RightToLeft, PositionOrder::SeededRandom(7)] {
            let cfg = DiscoveryConfig {
                length: 3,
                constraints: GapConstraints::parse("0-2,0-2").unwrap(),
                threshold: Ratio::new(2, 3),
                class: PatternClass::All,
                strategy: Strategy { position_order: order, candidate_order: CandidateOrder::TerminalsThenVars },
                start: None,
            };
            let (cp, _) = discover_subseq(&s, &cfg).unwrap();
            assert!(crate::oracle::brute_descriptive(&cp, &s, cfg.threshold, &cfg.class).unwrap());
        }
    }
}

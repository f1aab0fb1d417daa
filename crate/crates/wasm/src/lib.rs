//! Browser bindings for the interactive demo page. Each function takes the
//! same text inputs as the CLI, runs the corresponding library operation,
//! and returns a JSON report string for the page to render.

use wasm_bindgen::prelude::*;

use descry::classes::PatternClass;
use descry::discovery::{self, CandidateOrder, DiscoveryConfig, PositionOrder, Strategy};
use descry::pattern::{ConstrainedPattern, GapConstraints, Pattern};
use descry::report::{
    CheckReport, ConfigReport, MatchReport, RunReport, SupportReport, WitnessReport, WordMatchReport,
};
use descry::sample::Sample;
use descry::trace;
use descry::{angluin, subseq, Ratio};

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn parse_sample(sample_text: &str, chars_mode: bool) -> Result<Sample, JsError> {
    trace::parse_trace_file(sample_text, chars_mode).map_err(err)
}

#[allow(clippy::too_many_arguments)] // mirrors the CLI flag set
fn build_config(
    sample: &Sample,
    length: usize,
    gaps: &str,
    support: &str,
    class: &str,
    order: &str,
    candidates: &str,
    start: &str,
) -> Result<DiscoveryConfig, JsError> {
    let constraints = GapConstraints::parse(gaps).map_err(err)?;
    let start = if start.trim().is_empty() {
        None
    } else {
        let p = Pattern::parse(start, sample.alphabet()).map_err(err)?;
        Some(ConstrainedPattern::new(p, constraints.clone()).map_err(err)?)
    };
    let cfg = DiscoveryConfig {
        length,
        constraints,
        threshold: Ratio::parse(support).map_err(err)?,
        class: PatternClass::parse(class).map_err(err)?,
        strategy: Strategy {
            position_order: PositionOrder::parse(order).map_err(err)?,
            candidate_order: CandidateOrder::parse(candidates).map_err(err)?,
        },
        start,
    };
    cfg.validate().map_err(err)?;
    Ok(cfg)
}

/// Match one word against a pattern; subsequence mode lists up to
/// `witnesses` embeddings for the visualisation, angluin mode returns the
/// word substitution.
#[wasm_bindgen]
pub fn demo_match(word: &str, pattern: &str, gaps: &str, angluin_mode: bool, witnesses: usize) -> Result<String, JsError> {
    let alphabet = trace::alphabet_for_match(word, pattern).map_err(err)?;
    let w = trace::parse_word_text(word, &alphabet).map_err(err)?;
    let p = Pattern::parse(pattern, &alphabet).map_err(err)?;

    let mut report = MatchReport {
        mode: if angluin_mode { "angluin".into() } else { "subseq".into() },
        pattern: p.render(&alphabet),
        gaps: (!angluin_mode).then(|| gaps.to_string()),
        alphabet: alphabet.tokens().map(str::to_string).collect(),
        words: Vec::new(),
        support: None,
        witnesses: None,
    };
    let mut pattern_tokens: Vec<String> = Vec::new();
    for item in p.items() {
        pattern_tokens.push(item.render(&alphabet));
    }

    if angluin_mode {
        let result = angluin::member(&w, &p);
        report.words.push(WordMatchReport {
            word: descry::report::word_text(&w, &alphabet),
            matched: result.matched,
            witness: result.witness.map(|h| WitnessReport::from_word_substitution(&h, &alphabet)),
        });
    } else {
        let constraints = GapConstraints::parse(gaps).map_err(err)?;
        let cp = ConstrainedPattern::new(p.clone(), constraints).map_err(err)?;
        let result = subseq::match_subseq(&w, &cp);
        report.words.push(WordMatchReport {
            word: descry::report::word_text(&w, &alphabet),
            matched: result.matched,
            witness: result
                .witness
                .as_ref()
                .map(|(h, e)| WitnessReport::from_subseq_witness(h, e, &alphabet)),
        });
        let all = subseq::enumerate_embeddings(&w, &cp, witnesses.max(1));
        report.witnesses = Some(
            all.iter()
                .map(|(h, e)| WitnessReport::from_subseq_witness(h, e, &alphabet))
                .collect(),
        );
    }

    let word_tokens: Vec<String> = w.iter().map(|&s| alphabet.token(s).to_string()).collect();
    let value = serde_json::json!({
        "report": report,
        "word_tokens": word_tokens,
        "pattern_tokens": pattern_tokens,
    });
    Ok(value.to_string())
}

/// Run a discovery and return the full run report including the refinement
/// trace.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)] // mirrors the CLI flag set
pub fn demo_discover(
    sample_text: &str,
    chars_mode: bool,
    length: usize,
    gaps: &str,
    support: &str,
    class: &str,
    order: &str,
    candidates: &str,
    start: &str,
) -> Result<String, JsError> {
    let sample = parse_sample(sample_text, chars_mode)?;
    let cfg = build_config(&sample, length, gaps, support, class, order, candidates, start)?;
    match discovery::discover_subseq(&sample, &cfg) {
        Ok((result, trace)) => {
            let support = subseq::support(&sample, &result);
            let report = RunReport::new(&sample, &cfg, &result, &trace, support, 0.0);
            Ok(serde_json::to_string(&report).expect("report serializes"))
        }
        Err(descry::Error::InitialSupport { achieved, required }) => {
            let value = serde_json::json!({
                "config": ConfigReport::new(&sample, &cfg),
                "error": "initial-support",
                "achieved": achieved.to_string(),
                "required": required.to_string(),
            });
            Ok(value.to_string())
        }
        Err(e) => Err(err(e)),
    }
}

/// Check whether a pattern is descriptive; reports the refining certificate
/// when it is not.
#[wasm_bindgen]
pub fn demo_check(
    sample_text: &str,
    chars_mode: bool,
    start: &str,
    length: usize,
    gaps: &str,
    support: &str,
    class: &str,
) -> Result<String, JsError> {
    if start.trim().is_empty() {
        return Err(JsError::new("check needs a start pattern"));
    }
    let sample = parse_sample(sample_text, chars_mode)?;
    let cfg = build_config(&sample, length, gaps, support, class, "l2r", "terms-first", start)?;
    let start_cp = cfg.start.clone().expect("start parsed above");
    let (result, _) = discovery::discover_subseq(&sample, &cfg).map_err(err)?;
    let descriptive = result.pattern().canonicalize() == start_cp.pattern().canonicalize();
    let report = CheckReport {
        config: ConfigReport::new(&sample, &cfg),
        pattern: start_cp.pattern().render(sample.alphabet()),
        descriptive,
        certificate: (!descriptive).then(|| result.pattern().render(sample.alphabet())),
        support: SupportReport::new(subseq::support(&sample, &start_cp)),
        wall_time_ms: 0.0,
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

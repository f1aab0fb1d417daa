//! Machine-readable run reports. Field names are part of the JSON contract:
//! `config`, `pattern`, `support`, `trace`. Re-running with identical inputs
//! reproduces the report byte for byte except for `wall_time_ms`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::discovery::{DiscoveryConfig, PositionOrder, RefinementTrace, StepOutcome};
use crate::pattern::{Alphabet, ConstrainedPattern};
use crate::ratio::Ratio;
use crate::sample::{render_word, Sample, Word};
use crate::substitution::{Embedding, SymbolSubstitution, WordSubstitution};
use crate::sweeps::SweepReport;

#[derive(Debug, Clone, Serialize)]
pub struct SupportReport {
    pub fraction: String,
    pub decimal: f64,
}

impl SupportReport {
    pub fn new(r: Ratio) -> SupportReport {
        SupportReport { fraction: r.to_string(), decimal: r.to_f64() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigReport {
    pub sample_size: usize,
    pub alphabet: Vec<String>,
    pub length: usize,
    pub gaps: String,
    pub support_threshold: String,
    pub class: String,
    pub order: String,
    pub candidates: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start: Option<String>,
}

impl ConfigReport {
    pub fn new(sample: &Sample, cfg: &DiscoveryConfig) -> ConfigReport {
        ConfigReport {
            sample_size: sample.len(),
            alphabet: sample.alphabet().tokens().map(str::to_string).collect(),
            length: cfg.length,
            gaps: cfg.constraints.to_string(),
            support_threshold: cfg.threshold.to_string(),
            class: cfg.class.to_string(),
            order: cfg.strategy.position_order.to_string(),
            candidates: cfg.strategy.candidate_order.to_string(),
            seed: match cfg.strategy.position_order {
                PositionOrder::SeededRandom(seed) => Some(seed),
                _ => None,
            },
            start: cfg.start.as_ref().map(|cp| cp.pattern().render(sample.alphabet())),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AttemptReport {
    pub candidate: String,
    pub in_class: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<String>,
    pub accepted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub position: usize,
    pub variable: String,
    pub attempts: Vec<AttemptReport>,
    pub outcome: String,
    pub support: String,
    pub snapshot: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub config: ConfigReport,
    pub pattern: String,
    pub canonical_pattern: String,
    pub support: SupportReport,
    pub trace: Vec<StepReport>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(
        sample: &Sample,
        cfg: &DiscoveryConfig,
        result: &ConstrainedPattern,
        trace: &RefinementTrace,
        support: Ratio,
        wall_time_ms: f64,
    ) -> RunReport {
        let alphabet = sample.alphabet();
        RunReport {
            config: ConfigReport::new(sample, cfg),
            pattern: result.pattern().render(alphabet),
            canonical_pattern: result.pattern().canonicalize().render(alphabet),
            support: SupportReport::new(support),
            trace: trace_reports(trace, alphabet),
            wall_time_ms,
        }
    }
}

pub fn trace_reports(trace: &RefinementTrace, alphabet: &Alphabet) -> Vec<StepReport> {
    trace
        .steps
        .iter()
        .map(|step| StepReport {
            position: step.position,
            variable: step.variable.to_string(),
            attempts: step
                .attempts
                .iter()
                .map(|a| AttemptReport {
                    candidate: a.candidate.render(alphabet),
                    in_class: a.in_class,
                    support: a.support.map(|s| s.to_string()),
                    accepted: a.accepted,
                })
                .collect(),
            outcome: match &step.outcome {
                StepOutcome::Accepted(item) => format!("accepted {}", item.render(alphabet)),
                StepOutcome::KeptVariable => "kept-variable".to_string(),
            },
            support: step.support.to_string(),
            snapshot: step.snapshot.render(alphabet),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub assignment: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<usize>>,
}

impl WitnessReport {
    pub fn from_word_substitution(h: &WordSubstitution, alphabet: &Alphabet) -> WitnessReport {
        WitnessReport {
            assignment: h
                .iter()
                .map(|(v, image)| (v.to_string(), render_word(image, alphabet)))
                .collect(),
            embedding: None,
        }
    }

    pub fn from_subseq_witness(h: &SymbolSubstitution, e: &Embedding, alphabet: &Alphabet) -> WitnessReport {
        WitnessReport {
            assignment: h
                .iter()
                .map(|(v, s)| (v.to_string(), alphabet.token(*s).to_string()))
                .collect(),
            embedding: Some(e.positions().to_vec()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WordMatchReport {
    pub word: String,
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchReport {
    pub mode: String,
    pub pattern: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gaps: Option<String>,
    pub alphabet: Vec<String>,
    pub words: Vec<WordMatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<SupportReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessReport>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub config: ConfigReport,
    pub pattern: String,
    pub descriptive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub support: SupportReport,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepCaseReport {
    pub case: String,
    pub main: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub label: String,
    pub cases: usize,
    pub disagreements: Vec<SweepCaseReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
    pub sweeps: Vec<SweepSummary>,
    pub passed: bool,
    pub wall_time_ms: f64,
}

impl VerifyReport {
    pub fn new(suite: &str, seed: Option<u64>, cases: Option<usize>, sweeps: &[SweepReport], wall_time_ms: f64) -> VerifyReport {
        VerifyReport {
            suite: suite.to_string(),
            seed,
            cases,
            passed: sweeps.iter().all(SweepReport::passed),
            sweeps: sweeps
                .iter()
                .map(|s| SweepSummary {
                    label: s.label.clone(),
                    cases: s.cases,
                    disagreements: s
                        .disagreements
                        .iter()
                        .map(|d| SweepCaseReport { case: d.case.clone(), main: d.main, oracle: d.oracle })
                        .collect(),
                })
                .collect(),
            wall_time_ms,
        }
    }
}

/// Renders a word for reports; exposed for the CLI and the demo.
pub fn word_text(word: &Word, alphabet: &Alphabet) -> String {
    render_word(word, alphabet)
}

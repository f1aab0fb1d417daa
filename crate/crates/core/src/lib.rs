//! Descriptive pattern discovery for string samples and event traces.
//!
//! The crate has two matching semantics over a shared syntactic core:
//!
//! * classical pattern languages, where variables stand for non-empty words
//!   and a pattern matches a word exactly ([`angluin`]);
//! * subsequence patterns, where variables stand for single symbols and the
//!   substituted pattern is embedded as a subsequence under per-gap lower and
//!   upper bounds ([`subseq`]).
//!
//! On top of matching sit language inclusion for equal-length patterns
//! ([`inclusion`]), restricted pattern classes ([`classes`]), and the greedy
//! refinement algorithm that computes descriptive patterns for a sample,
//! optionally under a support threshold ([`discovery`]). The [`oracle`] module
//! holds independent brute-force reference implementations used to verify the
//! fast paths; [`sweeps`] wires those into reproducible agreement sweeps.
//!
//! ```
//! use descry::classes::PatternClass;
//! use descry::discovery::{discover_subseq, DiscoveryConfig, Strategy};
//! use descry::pattern::GapConstraints;
//! use descry::{trace, Ratio};
//!
//! let sample = trace::parse_trace_file("abc\nacb\nabcb\n", true)?;
//! let cfg = DiscoveryConfig {
//!     length: 2,
//!     constraints: GapConstraints::parse("0-5")?,
//!     threshold: Ratio::parse("1")?,
//!     class: PatternClass::All,
//!     strategy: Strategy::default(),
//!     start: None,
//! };
//! let (pattern, trace) = discover_subseq(&sample, &cfg)?;
//! assert_eq!(pattern.pattern().render(sample.alphabet()), "a b");
//! # Ok::<(), descry::Error>(())
//! ```

pub mod angluin;
pub mod classes;
pub mod discovery;
pub mod error;
pub mod inclusion;
pub mod oracle;
pub mod pattern;
pub mod ratio;
pub mod report;
pub mod sample;
pub mod subseq;
pub mod substitution;
pub mod sweeps;
pub mod trace;

pub use error::Error;
pub use pattern::{Alphabet, ConstrainedPattern, GapBound, GapConstraints, Pattern, PatternItem, Variable};
pub use ratio::Ratio;
pub use sample::Sample;

use std::fmt;

use crate::ratio::Ratio;

/// Errors produced by parsing, validation, and the discovery pipeline.
///
/// Parse-shaped variants come from malformed input text; the rest are
/// violations of documented preconditions (arity, class membership,
/// thresholds, oracle size guards).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    EmptyAlphabet,
    DuplicateSymbol(String),
    EmptySymbolToken,
    EmptyPattern,
    UnknownSymbol(String),
    BadVariableToken(String),
    BadGapBound(String),
    InvertedGapBound { lo: usize, hi: usize },
    GapArity { pattern_len: usize, bounds_len: usize },
    EmptyWord,
    EmptySample,
    BadRatio(String),
    ZeroPatternLength,
    ThresholdRange(Ratio),
    LengthMismatch { left: usize, right: usize },
    ConstraintMismatch,
    StartShape { expected_len: usize, got_len: usize },
    StartConstraints,
    NotInClass { pattern: String, class: String },
    InitialSupport { achieved: Ratio, required: Ratio },
    SizeGuard { what: &'static str, limit: usize, got: usize },
    EmptySweep,
    BadClassSpec(String),
    BadStrategySpec(String),
    IncompleteSubstitution,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlphabet => write!(f, "alphabet must contain at least one symbol"),
            Error::DuplicateSymbol(t) => write!(f, "duplicate alphabet symbol `{t}`"),
            Error::EmptySymbolToken => write!(f, "alphabet symbols must be non-empty tokens"),
            Error::EmptyPattern => write!(f, "pattern must contain at least one item"),
            Error::UnknownSymbol(t) => write!(f, "unknown terminal token `{t}` (not in alphabet)"),
            Error::BadVariableToken(t) => write!(f, "malformed variable token `{t}` (expected $k with k >= 1)"),
            Error::BadGapBound(t) => write!(f, "malformed gap bound `{t}` (expected lo-hi with hi an integer or `inf`)"),
            Error::InvertedGapBound { lo, hi } => write!(f, "inverted gap bound {lo}-{hi} (lower exceeds upper)"),
            Error::GapArity { pattern_len, bounds_len } => write!(
                f,
                "gap constraint arity mismatch: pattern of length {pattern_len} needs {} bounds, got {bounds_len}",
                pattern_len - 1
            ),
            Error::EmptyWord => write!(f, "words must be non-empty"),
            Error::EmptySample => write!(f, "sample must contain at least one word"),
            Error::BadRatio(t) => write!(f, "malformed rational `{t}` (expected p/q, an integer, or a decimal)"),
            Error::ZeroPatternLength => write!(f, "pattern length must be at least 1"),
            Error::ThresholdRange(r) => write!(f, "support threshold {r} outside (0, 1]"),
            Error::LengthMismatch { left, right } => {
                write!(f, "pattern length mismatch: {left} vs {right} (inclusion is only decided for equal lengths)")
            }
            Error::ConstraintMismatch => write!(f, "gap constraint tuples differ (inclusion requires identical constraints)"),
            Error::StartShape { expected_len, got_len } => {
                write!(f, "start pattern has length {got_len}, config requires {expected_len}")
            }
            Error::StartConstraints => write!(f, "start pattern constraints differ from config constraints"),
            Error::NotInClass { pattern, class } => write!(f, "pattern `{pattern}` is not in class {class}"),
            Error::InitialSupport { achieved, required } => {
                write!(f, "initial pattern support {achieved} is below threshold {required}")
            }
            Error::SizeGuard { what, limit, got } => {
                write!(f, "size guard exceeded: {what} is {got}, brute-force bound is {limit}")
            }
            Error::EmptySweep => write!(f, "sweep must run at least one case"),
            Error::BadClassSpec(t) => {
                write!(f, "unknown pattern class `{t}` (expected all, regular, noncross, or maxvars:k)")
            }
            Error::BadStrategySpec(t) => {
                write!(f, "unknown strategy `{t}` (expected l2r, r2l, random:SEED, terms-first, or vars-first)")
            }
            Error::IncompleteSubstitution => write!(f, "substitution does not cover every variable of the pattern"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

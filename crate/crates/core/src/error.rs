use thiserror::Error;

/// Errors produced by rhythm construction, parsing and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RhythmError {
    #[error("timespan must be at least 1")]
    ZeroTimespan,
    #[error("onset {onset} is outside the timespan 0..{n}")]
    OnsetOutOfRange { onset: usize, n: usize },
    #[error("onset {0} appears more than once")]
    DuplicateOnset(usize),
    #[error("needs at least {required} onset(s), found {found}")]
    TooFewOnsets { required: usize, found: usize },
    #[error("onset count {k} exceeds timespan {n}")]
    TooManyOnsets { k: usize, n: usize },
    #[error("empty pattern")]
    EmptyPattern,
    #[error("unexpected character {ch:?} at index {index}")]
    UnexpectedChar { ch: char, index: usize },
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("distance sequence sums to {sum}, expected timespan {n}")]
    SumMismatch { sum: usize, n: usize },
    #[error("distance sequence entries must be positive")]
    NonPositiveGap,
    #[error("start pulse {start} is outside the timespan 0..{n}")]
    StartOutOfRange { start: usize, n: usize },
    #[error("generator {m} produces a repeated onset within the first {k} multiples modulo {n}")]
    GeneratorCollision { k: usize, n: usize, m: usize },
    #[error("generator {m} must be smaller than timespan {n}")]
    GeneratorOutOfRange { m: usize, n: usize },
    #[error("level {level} is outside 1..={k}")]
    LevelOutOfRange { level: usize, k: usize },
    #[error("timespan {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("rhythm {0} is not Erdős-deep")]
    NotDeep(String),
    #[error("removal order is not a permutation of the rhythm's onsets")]
    NotPermutation,
    #[error("string must not end in 0 for the shift operator")]
    TrailingZero,
    #[error("empty string")]
    EmptyString,
    #[error("year must be at least 1")]
    InvalidYear,
}

pub type Result<T> = std::result::Result<T, RhythmError>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("braid token {token:?} is not a nonzero integer")]
    BadToken { token: String },
    #[error("generator {generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: i64, strands: usize },
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("plat closure needs an even number of strands, got {0}")]
    OddStrands(usize),
    #[error("event {index} ({event}) is invalid at width {width}")]
    InvalidEvent {
        index: usize,
        event: String,
        width: usize,
    },
    #[error("diagram does not close: final width {0}")]
    NotClosed(usize),
    #[error("move does not match at event {index}: {reason}")]
    PatternMismatch { index: usize, reason: String },
    #[error("level {level} out of range (diagram has {levels} levels)")]
    LevelOutOfRange { level: usize, levels: usize },
    #[error("strand window [{start}, {end}) exceeds width {width} at level {level}")]
    WindowOutOfRange {
        start: usize,
        end: usize,
        width: usize,
        level: usize,
    },
    #[error("malformed diagram document: {0}")]
    Json(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JonesError {
    #[error("r must be an integer >= 5 other than 6, got {0}")]
    InvalidRoot(u32),
    #[error("state sum limited to {cap} crossings, diagram has {crossings}")]
    CrossingCap { cap: usize, crossings: usize },
    #[error("state sum coefficient overflow")]
    Overflow,
    #[error(transparent)]
    Link(#[from] LinkError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("genus is only defined for knots, diagram has {0} components")]
    NotAKnot(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VogelError {
    #[error("no braid form reached after {0} moves")]
    NoProgress(usize),
    #[error("closed braid read-off failed: {0}")]
    ReadOff(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("matrix [[{a}, {b}], [{c}, {d}]] has determinant {det}, expected 1")]
    NotUnimodular {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        det: i128,
    },
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Jones(#[from] JonesError),
}

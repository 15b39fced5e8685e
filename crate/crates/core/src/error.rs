use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must have at least one term")]
    EmptySequence,

    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cell ({n}, {k}) outside the triangle 1 <= k <= n <= {size}")]
    CellOutOfRange { n: usize, k: usize, size: usize },

    #[error("the m-lift needs m >= 1")]
    ZeroLift,

    #[error("invalid case parameters: {0}")]
    InvalidParameters(String),

    #[error("length {requested} is too short to hold the {seeds} recurrence seeds")]
    TooShort { requested: usize, seeds: usize },

    #[error("{words} words exceed the enumeration budget of {budget}")]
    BudgetExceeded { words: u128, budget: u64 },

    #[error("letter {letter} is outside the alphabet of size {alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: u32 },

    #[error("m = 0 leaves no marked letter")]
    NoMarkedLetter,

    #[error("quadratic evaluation did not reduce to an integer: {0}")]
    NonIntegral(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown classical sequence `{0}`")]
    UnknownSequence(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("not a permutation of 1..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },
    #[error("cyclic permutation must start with 1 (found {0})")]
    NotNormalized(usize),
    #[error("at least 3 vertices required (found {0})")]
    TooSmall(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("letter '{0}' is not allowed here")]
    AlphabetMismatch(char),
    #[error("not a valid sigma word: {0}")]
    NotAWord(String),
    #[error("permutation has keratoid vertices {0:?}")]
    HasKeratoids(Vec<usize>),
    #[error("n = {n} exceeds the brute-force limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("block of length {0} spans every vertex")]
    BlockTooLong(usize),
    #[error("result is not representable as a b-diagram: {0}")]
    NotRepresentable(String),
    #[error("arc {0} of the diagram is missing from the permutation's arc set")]
    NotAGenerator(String),
    #[error("vertex {0} already has two arcs")]
    DegreeExceeded(usize),
    #[error("arc {0} would close a cycle")]
    WouldCycle(String),
    #[error("arc {0} is already present")]
    AlreadyPresent(String),
    #[error("arc {0} is not present")]
    NotPresent(String),
    #[error("vertex {vertex} is outside 1..{n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("{count} results exceed the cap of {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("diagrams have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("internal consistency failure: expected {expected} results, found {found}")]
    CountMismatch { expected: String, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

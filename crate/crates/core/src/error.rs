use crate::domain::ValueDomain;
use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Semiring law that a law check can report as violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    AddAssociativity,
    AddCommutativity,
    AddIdentity,
    Annihilator,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::AddAssociativity => "associativity",
            Law::AddCommutativity => "commutativity",
            Law::AddIdentity => "identity",
            Law::Annihilator => "annihilator",
        })
    }
}

/// A failed law check together with the sampled values that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub semiring: String,
    pub law: Law,
    pub witnesses: Vec<String>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "semiring {} violates {} with [{}]",
            self.semiring,
            self.law,
            self.witnesses.join(", ")
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown semiring `{0}`")]
    UnknownSemiring(String),
    #[error("semiring `{semiring}` is not supported over {domain}")]
    DomainNotSupported { semiring: String, domain: ValueDomain },
    #[error("semiring name `{0}` is already registered")]
    DuplicateName(String),
    #[error("law check failed: {0}")]
    LawCheckFailure(LawViolation),

    #[error("entry {position} at ({row}, {col}) is out of range for a {nrows}x{ncols} matrix")]
    TripleOutOfRange {
        position: usize,
        row: usize,
        col: usize,
        nrows: usize,
        ncols: usize,
    },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch {
        expected: ValueDomain,
        found: ValueDomain,
    },
    #[error("matrix is not square ({nrows}x{ncols})")]
    NonSquare { nrows: usize, ncols: usize },
    #[error("invalid container: {0}")]
    InvalidStructure(String),

    #[error("source list is empty")]
    EmptySources,
    #[error("negative edge weight")]
    NegativeWeight,
    #[error("matrix pattern is not symmetric")]
    NotSymmetric,
    #[error("graph has a self-loop")]
    SelfLoop,
    #[error("vertex {0} has no outgoing edges")]
    DanglingVertex(usize),
    #[error("alpha out of range (0,1)")]
    AlphaOutOfRange(f64),
    #[error("{0} values are not accepted by graph algorithms")]
    UnsupportedDomain(ValueDomain),
    #[error("{algorithm} did not reach a fixed point within {cap} iterations")]
    IterationCap { algorithm: &'static str, cap: usize },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unsupported Matrix Market header: {0}")]
    UnsupportedHeader(String),
    #[error("line {line}: index ({row}, {col}) out of bounds for {nrows}x{ncols} (indices are 1-based)")]
    IndexOutOfBounds {
        line: usize,
        row: i64,
        col: i64,
        nrows: usize,
        ncols: usize,
    },
    #[error("line {line}: negative vertex index")]
    NegativeIndex { line: usize },
    #[error("{0} values cannot be serialized")]
    UnserializableDomain(ValueDomain),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    /// True for failures of an algorithm's input preconditions (as opposed to
    /// malformed data or I/O problems).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::EmptySources
                | Error::NegativeWeight
                | Error::NotSymmetric
                | Error::SelfLoop
                | Error::DanglingVertex(_)
                | Error::AlphaOutOfRange(_)
                | Error::UnsupportedDomain(_)
                | Error::NonSquare { .. }
                | Error::IndexOutOfRange { .. }
                | Error::DuplicateIndex(_)
                | Error::IterationCap { .. }
        )
    }
}

use std::fmt;

/// Errors shared by all decomposition modules.
///
/// The variants distinguish "the caller misused the API" (`Usage`,
/// `EdgeAbsent`), "the input is outside the regime an operation needs"
/// (`HypothesisViolated`, `OddOrder`, `InsufficientAnchors`), and "a
/// bounded randomized search gave up" (`NotFound`, `RetryExhausted`).
#[derive(Debug)]
pub enum Error {
    /// API misuse: bad parameter ranges, oversized exact checks, etc.
    Usage(String),
    /// An edge removal referenced an edge that is not present.
    EdgeAbsent { u: usize, v: usize },
    /// A heuristic search exhausted its retry budget.
    NotFound { what: String },
    /// A randomized construction never met its conditions within budget.
    RetryExhausted { what: String },
    /// A flow/realization problem has no solution.
    Infeasible { what: String },
    /// The input violates a precondition of the decomposition regime.
    HypothesisViolated { what: String },
    /// The extraction loop exceeded its bound, so the input is out of regime.
    IterationOverflow { steps: usize, limit: usize },
    /// Not enough eligible anchor vertices for the path-surgery step.
    InsufficientAnchors { needed: usize, available: usize },
    /// No linear forest can absorb a reinserted edge (consistency breach).
    InsertionFailed { u: usize, v: usize },
    /// A required matching cannot cover enough vertices.
    MatchingDeficient { needed: usize, covered: usize },
    /// A remainder graph that must be regular is not.
    RegularityMismatch {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    /// Edge colouring of odd-order graphs is refused, not guessed.
    OddOrder { n: usize },
    /// Malformed input file.
    Parse { line: usize, msg: String },
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::EdgeAbsent { u, v } => write!(f, "edge {u}-{v} is not present"),
            Error::NotFound { what } => write!(f, "search exhausted: {what}"),
            Error::RetryExhausted { what } => write!(f, "retry budget exhausted: {what}"),
            Error::Infeasible { what } => write!(f, "infeasible: {what}"),
            Error::HypothesisViolated { what } => write!(f, "hypothesis violated: {what}"),
            Error::IterationOverflow { steps, limit } => {
                write!(f, "extraction loop overflow: {steps} steps exceed limit {limit}")
            }
            Error::InsufficientAnchors { needed, available } => {
                write!(f, "need {needed} anchor vertices, only {available} eligible")
            }
            Error::InsertionFailed { u, v } => {
                write!(f, "no forest can absorb edge {u}-{v}")
            }
            Error::MatchingDeficient { needed, covered } => {
                write!(f, "matching covers {covered} vertices, needed {needed}")
            }
            Error::RegularityMismatch {
                vertex,
                degree,
                expected,
            } => write!(
                f,
                "remainder not regular: vertex {vertex} has degree {degree}, expected {expected}"
            ),
            Error::OddOrder { n } => write!(f, "refusing odd order n = {n}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

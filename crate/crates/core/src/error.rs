//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analysing a structure.
///
/// Witnesses are element indices into the carrier of the structure being
/// validated, so a failed axiom can be replayed by hand against the tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exhaustive axiom scan found a counterexample.
    #[error("axiom `{law}` fails at witness {witness:?}")]
    AxiomViolation { law: &'static str, witness: Vec<usize> },

    /// Operation tables have inconsistent dimensions.
    #[error("table size mismatch: {0}")]
    SizeMismatch(String),

    /// Parameters out of range (zero-size carriers, bad indices, ...).
    #[error("bad parameters: {0}")]
    BadParams(String),

    /// A construction would exceed an explicit size cap.
    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    SizeCapExceeded { what: &'static str, needed: usize, cap: usize },

    /// A quotient or induced map is not constant on classes.
    #[error("operation not well-defined on classes: witness {witness:?}")]
    IllDefined { witness: Vec<usize> },

    /// Two structures that must share a carrier or base disagree.
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    /// A sequence or diagram does not have the required shape.
    #[error("shape error: {0}")]
    ShapeError(String),

    /// An operation requires a subtractive subsemimodule and got one that
    /// is not; the witness is an element of the closure outside the set.
    #[error("subsemimodule is not subtractive: witness element {witness}")]
    NotSubtractive { witness: usize },

    /// A conditional construction was invoked with its hypothesis false.
    #[error("hypothesis fails: {0}")]
    HypothesisFailure(String),

    /// A certification oracle failed; the result it guards is untrusted.
    #[error("certification failure: {0}")]
    CertificationFailure(String),

    /// Star inverses require an additively regular semiring.
    #[error("element {element} is not additively regular")]
    NotAdditivelyRegular { element: usize },

    /// An element has several star inverses where uniqueness was required.
    #[error("star inverse of {element} is not unique: {first} and {second} both work")]
    NonUnique { element: usize, first: usize, second: usize },

    /// A catalog id or reference string could not be parsed.
    #[error("cannot parse reference `{0}`")]
    ParseError(String),
}

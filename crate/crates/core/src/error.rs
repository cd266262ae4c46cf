use thiserror::Error;

/// Everything that can go wrong when building or combining the algebraic
/// objects in this crate. Validation is strict: constructors reject bad
/// input instead of clamping it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element '{0}' appears more than once")]
    DuplicateElement(String),

    #[error("unknown element '{0}'")]
    UnknownElement(String),

    #[error("no count given for element '{0}'")]
    MissingElement(String),

    /// A count, constant tag, or map argument fell outside `0..=bound`.
    #[error("value {value} is outside 0..={bound}")]
    OutOfRange { value: u32, bound: u32 },

    #[error("operands belong to different multiset spaces")]
    SpaceMismatch,

    #[error("not an order-preserving bound map: {0}")]
    NotOp(String),

    /// The element table of a mapping is not a total function into the
    /// intended codomain.
    #[error("bad element assignment: {0}")]
    BadAssignment(String),

    #[error("bound mismatch: {0}")]
    BoundMismatch(String),

    #[error("bad element order: {0}")]
    BadOrder(String),

    #[error("codomain bound {got} is too small; need at least {required}")]
    BoundTooSmall { required: u64, got: u32 },

    #[error("unknown claim id '{0}'")]
    UnknownClaim(String),

    /// A stored audit instance lacks a part the claim quantifies over.
    #[error("instance does not fit the claim: {0}")]
    BadInstance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

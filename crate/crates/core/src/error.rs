use thiserror::Error;

use crate::order::OrderKind;
use crate::rewrite::StandardRepresentation;

/// Errors raised by the algebra, rewriting and completion layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no leading term: polynomial is zero")]
    NoLeadingTerm,

    #[error("zero {0} is not allowed here")]
    ZeroInput(&'static str),

    #[error("path does not belong to this quiver: {0}")]
    ForeignPath(String),

    #[error("order `{0}` is not a well-ordering; pass the unsafe flag to run it under a step cap")]
    UnsafeOrder(OrderKind),

    #[error("division exceeded the step cap of {cap} sweeps")]
    StepCapExceeded {
        cap: usize,
        partial: Box<StandardRepresentation>,
    },

    #[error("invalid overlap witness: {0}")]
    InvalidOverlap(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid limits: {0}")]
    InvalidLimits(String),

    #[error("path enumeration refused: quiver has a cycle")]
    UnboundedEnumeration,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use alloc::string::String;

use crate::logic::Atom;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix entry count {got} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("the zero vector is not a state")]
    ZeroState,
    #[error("matrix is not a projector: {0}")]
    NotProjector(&'static str),
    #[error("unsupported connective: {0}")]
    UnsupportedConnective(String),
    #[error("no projector available for atom {0}")]
    MissingAtom(Atom),
    #[error("assignment has no value for atom {0}")]
    IncompleteAssignment(Atom),
    #[error("verifying {0} is impossible in the current state")]
    ImpossibleOutcome(Atom),
    #[error("{labels} labels given for {components} components")]
    LengthMismatch { labels: usize, components: usize },
    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

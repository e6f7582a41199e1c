//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid surface signature ({genus},{holes}): need 2*genus + holes > 2")]
    InvalidSurface { genus: u32, holes: u32 },

    #[error("no curve carries label {0}")]
    UnknownLabel(u32),

    #[error("curve {0} is not a loop")]
    NotALoop(u32),

    #[error("curve {0} is a loop; a loop flip takes no re-pairing choice")]
    LoopFlipChoice(u32),

    #[error("flip of non-loop curve {0} needs a re-pairing choice (A or B)")]
    MissingFlipChoice(u32),

    #[error("{pants} pairs of pants exceed the enumeration bound {bound}")]
    BoundExceeded { pants: u32, bound: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("zero homology class; use CurveClass::trivial for separating curves")]
    TrivialClass,

    #[error("generators are dependent over the rationals")]
    DependentGenerators,

    #[error("generators do not span an isotropic subspace")]
    NotIsotropic,

    #[error("wrong generator count: got {got}, lattice of genus {genus} needs {genus}")]
    WrongGeneratorCount { got: usize, genus: u32 },

    #[error("switch moves are forbidden in strict mode")]
    SwitchInStrictMode,

    #[error("invalid hexagon labeling: {0}")]
    InvalidLabeling(String),

    #[error("no flip rule registered for label {0}")]
    NoFlipRule(u32),

    #[error("pants relation does not sum to zero")]
    RelationNotZero,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("move {index}: {msg}")]
    IllegalMove { index: usize, msg: String },

    #[error("graph invariant violated: {0}")]
    GraphInvariant(String),
}

//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors reported by configuration, chirotope and construction operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A matrix operation received incompatible dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A configuration does not have the full rank required for its chirotope.
    #[error("degenerate configuration: rank {found} < {expected}")]
    DegenerateConfiguration { expected: usize, found: usize },

    /// Deleting an element would leave fewer elements than the rank.
    #[error("cannot delete: {remaining} elements left for rank {rank}")]
    RankDeficient { remaining: usize, rank: usize },

    /// Contraction of a loop (an element in no basis) is undefined.
    #[error("cannot contract loop element {label}")]
    LoopContraction { label: usize },

    /// A program or flag referenced an element that is not in the ground set.
    #[error("unknown element label {label}")]
    UnknownLabel { label: usize },

    /// A lexicographic extension program must have at least one step.
    #[error("empty lexicographic program")]
    EmptyProgram,

    /// Epsilon certification requires a strictly positive epsilon.
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),

    /// The Grassmann-Pluecker scan was refused because it would exceed its budget.
    #[error("Grassmann-Pluecker check budget exceeded: cost {cost} > budget {budget}")]
    GpBudgetExceeded { cost: u128, budget: u128 },

    /// The chirotope is not the oriented matroid of a polytope with all points
    /// extreme; `witness` is a point that is not a vertex.
    #[error("not a polytope: element {witness} is not a vertex")]
    NotAPolytope { witness: usize },

    /// A subset that was required to be a face of the polytope is not one.
    #[error("subset {0:?} is not a face")]
    NotAFace(Vec<usize>),

    /// An operation required a neighborly polytope.
    #[error("chirotope is not neighborly")]
    NotNeighborly,

    /// An operation required an even polytope dimension.
    #[error("polytope dimension {0} is odd, even dimension required")]
    OddDimension(usize),

    /// An operation required a uniform chirotope.
    #[error("chirotope is not uniform")]
    NotUniform,

    /// A Gale sewing program must consist of `rank` distinct independent elements.
    #[error("program is not in general position: {0}")]
    GeneralPosition(String),

    /// A flag passed to `sew` failed the universal-flag check.
    #[error("flag is not universal: {0}")]
    NonUniversalFlag(String),

    /// A construction produced an output violating its own guarantee.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    /// An internal cross-check failed; this indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    /// An operation received an argument outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A text input could not be parsed; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

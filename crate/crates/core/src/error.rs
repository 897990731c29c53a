use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid ordered set partition: {0}")]
    InvalidOsp(String),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u32>),

    #[error("partition {partition:?} is not a double (expected parts 2a1,2a1,2a2,2a2,...)")]
    NotADouble { partition: Vec<u32> },

    #[error("index {index} is not a doubled Schubert index")]
    NotADoubleIndex { index: String },

    #[error("partition {partition:?} does not fit in the {rows}x{cols} box")]
    BoxOverflow {
        partition: Vec<u32>,
        rows: u32,
        cols: u32,
    },

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: u32,
        max: u32,
    },

    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("Chern class degree {degree} out of range 0..={rank}")]
    DegreeOutOfRange { degree: u32, rank: u32 },

    #[error("missing Chern class of degree {0}")]
    MissingChernDegree(u32),

    #[error("dimension mismatch: conditions have total degree {degree}, space has dimension {dimension}")]
    DimensionMismatch { degree: u64, dimension: u64 },

    #[error("polynomial support {exponents:?} lies outside the staircase of S_{n}")]
    SupportOutsideStaircase { exponents: Vec<u32>, n: u32 },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("index {index} is not valid for space {space}")]
    IndexKindMismatch { index: String, space: String },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

impl Error {
    /// True for errors caused by a well-formed problem that has no cohomological answer
    /// (as opposed to malformed input).
    pub fn is_problem_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::NotADoubleIndex { .. }
                | Error::NotADouble { .. }
        )
    }

    /// True for inputs that are malformed regardless of the mathematics: bad
    /// indices, bad spaces, indices that do not belong to the space.
    pub fn is_schema_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidPartition(_)
                | Error::InvalidOsp(_)
                | Error::InvalidPermutation(_)
                | Error::BoxOverflow { .. }
                | Error::InvalidSpace(_)
                | Error::IndexKindMismatch { .. }
                | Error::InvalidProblem(_)
        )
    }
}

use thiserror::Error;

use crate::profile::Role;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("count {count} exceeds group size {group_size}")]
    InvalidCount { count: u64, group_size: u64 },

    #[error("group size must be at least 1")]
    EmptyGroup,

    #[error("stage `{stage}`: counts sum to {sum}, expected group size {expected}")]
    PartitionMismatch {
        stage: String,
        sum: u64,
        expected: u64,
    },

    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("label set needs at least 2 distinct labels")]
    TooFewLabels,

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("invalid profile space: {0}")]
    InvalidSpace(String),

    #[error("profile spaces differ: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("pseudo-frequencies need at least {needed} distributions, got {found}")]
    TooFewDistributions { needed: usize, found: usize },

    #[error("expected a {expected} distribution, got {found}")]
    RoleMismatch { expected: Role, found: Role },

    #[error("stage `{0}` has every membership grade equal to zero")]
    DegenerateSet(String),

    #[error("distribution has no positive weight")]
    DegenerateDistribution,

    #[error("centroid of an all-zero bar graph is undefined")]
    DegenerateBars,

    #[error("value {0} is outside the allowed domain")]
    Domain(String),

    #[error("Shannon normalizer must be at least 2, got {0}")]
    InvalidNormalizer(u64),

    #[error("possibility sequence is not non-increasing at position {0}")]
    NotOrdered(usize),
}

impl Error {
    /// True for errors caused by data that is valid but carries no information
    /// (all-zero sets or distributions), as opposed to malformed input.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateSet(_) | Error::DegenerateDistribution | Error::DegenerateBars
        )
    }
}

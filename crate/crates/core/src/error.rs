use thiserror::Error;

use crate::partitions::{Family, GroupType, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition {lambda} has size {got}, but {group} has standard dimension {expected}")]
    SizeMismatch {
        group: GroupType,
        lambda: Partition,
        expected: usize,
        got: usize,
    },
    #[error("partitions {lhs} and {rhs} have different sizes")]
    SizesDiffer { lhs: Partition, rhs: Partition },
    #[error("{lambda} is not a nilpotent orbit of {group}: {rule}")]
    InvalidOrbit {
        group: GroupType,
        lambda: Partition,
        rule: &'static str,
    },
    #[error("invalid group type {family}:{dim}: {reason}")]
    InvalidGroup {
        family: Family,
        dim: usize,
        reason: &'static str,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("datum is not in a hook family")]
    NotHookFamily,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("standard dimension {dim} exceeds oracle bound {bound}")]
    BoundExceeded { dim: usize, bound: usize },
    #[error("reduction of a {ambient}-dimensional space by {reducer} is not meaningful")]
    NegativeReduction { ambient: usize, reducer: GroupType },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal oracle error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

use crate::partition::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(alloc::vec::Vec<u32>),
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),
    #[error("partition {partition} has more than {n} parts")]
    TooManyParts { partition: Partition, n: usize },
    #[error("{0}")]
    InvalidGroup(String),
    #[error("size mismatch: |lambda| = {left}, |mu| = {right}")]
    SizeMismatch { left: u64, right: u64 },
    #[error("input not symmetric: leading exponent {0:?} is not a partition")]
    NotSymmetric(alloc::vec::Vec<i32>),
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("the O(n) branching is not a scalar oracle; use the predicate path")]
    UsePredicatePath,
    #[error("operation requires a connected group (Sp or SO), got {0}")]
    NotConnected(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    Sp,
    O,
    SO,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Sp => "sp",
            GroupKind::O => "o",
            GroupKind::SO => "so",
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(GroupKind::Sp),
            "o" => Ok(GroupKind::O),
            "so" => Ok(GroupKind::SO),
            other => Err(Error::InvalidGroup(format!("unknown group kind {other:?}"))),
        }
    }
}

/// One of `Sp(n)` (n even), `O(n)`, `SO(n)` inside `GL(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupId {
    kind: GroupKind,
    n: usize,
}

impl GroupId {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup(format!("{}(0) is not supported", kind.name())));
        }
        if kind == GroupKind::Sp && n % 2 != 0 {
            return Err(Error::InvalidGroup(format!("Sp(n) needs even n, got {n}")));
        }
        Ok(GroupId { kind, n })
    }

    pub fn sp(n: usize) -> Result<Self> {
        Self::new(GroupKind::Sp, n)
    }

    pub fn o(n: usize) -> Result<Self> {
        Self::new(GroupKind::O, n)
    }

    pub fn so(n: usize) -> Result<Self> {
        Self::new(GroupKind::SO, n)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the maximal torus, `⌊n/2⌋`.
    pub fn rank(&self) -> usize {
        self.n / 2
    }

    pub fn is_connected(&self) -> bool {
        self.kind != GroupKind::O
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GroupKind::Sp => "Sp",
            GroupKind::O => "O",
            GroupKind::SO => "SO",
        };
        write!(f, "{name}({})", self.n)
    }
}

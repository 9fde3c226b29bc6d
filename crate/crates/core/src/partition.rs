//! Partitions and Young-diagram combinatorics.
//!
//! A [`Partition`] is stored without trailing zeros. Predicates that depend on
//! the ambient rank (`is_odd_partition`, `has_even_columns`) take `n`
//! explicitly and pad internally.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, rejecting increasing parts. Trailing zeros are
    /// dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts known to be weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(m)`.
    pub fn row(m: u32) -> Self {
        Partition::from_decreasing(vec![m])
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        self.check_length(n)?;
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn check_length(&self, n: usize) -> Result<()> {
        if self.len() > n {
            Err(Error::TooManyParts { partition: self.clone(), n })
        } else {
            Ok(())
        }
    }

    /// Transpose partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Componentwise doubling, `δ ↦ 2δ`.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|&p| 2 * p).collect())
    }

    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let rank = self.0.iter().enumerate().take_while(|&(i, &p)| p as usize > i).count();
        let arms = (0..rank).map(|i| self.0[i] - 1 - i as u32).collect();
        let legs = (0..rank).map(|i| conj.0[i] - 1 - i as u32).collect();
        FrobeniusCoords { arms, legs }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[3,1]"`; the brackets are optional and `"[]"` is empty.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotAPartition(Vec::new());
        let inner = s.trim();
        let inner = inner.strip_prefix('[').map_or(Ok(inner), |r| r.strip_suffix(']').ok_or_else(bad))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Frobenius coordinates `(arms | legs)` along the main diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        if arms.len() != legs.len() {
            return Err(Error::InvalidFrobenius(String::from("arms and legs differ in length")));
        }
        if !strictly_decreasing(&arms) || !strictly_decreasing(&legs) {
            return Err(Error::InvalidFrobenius(String::from("arms and legs must be strictly decreasing")));
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    /// Durfee rank `p`.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let p = self.rank();
        // columns j < p have length legs[j] + j + 1 (0-based j)
        let col_len: Vec<u32> = self.legs.iter().enumerate().map(|(j, &l)| l + j as u32 + 1).collect();
        let height = col_len.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(height);
        for i in 0..height {
            if i < p {
                parts.push(self.arms[i] + i as u32 + 1);
            } else {
                parts.push(col_len.iter().filter(|&&c| c as usize > i).count() as u32);
            }
        }
        Partition::from_decreasing(parts)
    }
}

fn strictly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

pub fn frobenius_to_partition(f: &FrobeniusCoords) -> Partition {
    f.to_partition()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Result of stripping a boundary strip off a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookRemoval {
    pub result: Partition,
    /// Number of distinct columns met by the removed strip.
    pub columns_spanned: u32,
    /// Number of distinct rows met by the removed strip.
    pub rows_spanned: u32,
}

/// Removes the first `len` boxes of the rim of `mu`, walking from the bottom
/// box of the first column towards the top-right. Returns `None` when the
/// rim is shorter than `len` or the remaining boxes do not form a diagram.
///
/// # Panics
///
/// If `len == 0`.
pub fn remove_boundary_hook(mu: &Partition, len: usize) -> Option<HookRemoval> {
    assert!(len > 0, "hook length must be positive");
    if mu.is_empty() {
        return None;
    }
    // rim path as (row, col), 0-based
    let mut path = Vec::new();
    let (mut i, mut j) = (mu.len() - 1, 0usize);
    loop {
        path.push((i, j));
        if path.len() == len {
            break;
        }
        if (j + 1) < mu.part(i) as usize {
            j += 1;
        } else if i > 0 {
            i -= 1;
        } else {
            return None;
        }
    }

    let mut rows = mu.parts().to_vec();
    let mut removed_per_row = vec![0u32; rows.len()];
    let mut max_col_removed = vec![0usize; rows.len()];
    let mut cols = Vec::new();
    for &(r, c) in &path {
        removed_per_row[r] += 1;
        max_col_removed[r] = max_col_removed[r].max(c + 1);
        if !cols.contains(&c) {
            cols.push(c);
        }
    }
    for r in 0..rows.len() {
        if removed_per_row[r] > 0 {
            // the removed boxes in a row must be its rightmost ones
            if max_col_removed[r] != rows[r] as usize {
                return None;
            }
            rows[r] -= removed_per_row[r];
        }
    }
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(HookRemoval {
        result: Partition::from_decreasing(rows),
        columns_spanned: cols.len() as u32,
        rows_spanned: removed_per_row.iter().filter(|&&k| k > 0).count() as u32,
    })
}

/// Every nonzero part is even.
pub fn is_even_partition(lambda: &Partition) -> bool {
    lambda.parts().iter().all(|p| p % 2 == 0)
}

/// `λ` padded to exactly `n` parts has all parts odd.
pub fn is_odd_partition(lambda: &Partition, n: usize) -> Result<bool> {
    lambda.check_length(n)?;
    Ok(lambda.len() == n && lambda.parts().iter().all(|p| p % 2 == 1))
}

/// `λ_1 = λ_2, λ_3 = λ_4, …, λ_{n-1} = λ_n` after padding to `n = 2k` parts.
pub fn has_even_columns(lambda: &Partition, n: usize) -> Result<bool> {
    if n % 2 != 0 {
        return Err(Error::InvalidGroup(alloc::format!("even-columns test needs even n, got {n}")));
    }
    let v = lambda.padded(n)?;
    Ok(v.chunks(2).all(|c| c[0] == c[1]))
}

/// All partitions of `size` with at most `max_length` parts, in decreasing
/// lexicographic order.
pub fn enumerate_partitions(size: u32, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(size, size, max_length, &mut cur, &mut out);
    out
}

fn fill_partitions(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for first in (1..=cap.min(rest)).rev() {
        // remaining slots must be able to hold the rest
        if u64::from(first) * (slots as u64) < u64::from(rest) {
            break;
        }
        cur.push(first);
        fill_partitions(rest - first, first, slots - 1, cur, out);
        cur.pop();
    }
}

/// All strictly decreasing tuples `α_1 > ⋯ > α_p ≥ 0` (or `> 0` when
/// `positive` is set) with `α_1 ≤ max_part` and exactly `num_parts`
/// entries, in increasing lexicographic order.
pub fn enumerate_strict_partitions(max_part: u32, num_parts: usize, positive: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let floor = u32::from(positive);
    let mut cur = Vec::with_capacity(num_parts);
    fill_strict(max_part, num_parts, floor, &mut cur, &mut out);
    out
}

fn fill_strict(cap: u32, slots: usize, floor: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 0 {
        out.push(cur.clone());
        return;
    }
    // the entry chosen here must leave room for `slots - 1` smaller entries
    let lowest = floor + slots as u32 - 1;
    if lowest > cap {
        return;
    }
    for a in lowest..=cap {
        cur.push(a);
        fill_strict(a.saturating_sub(1), slots - 1, floor, cur, out);
        cur.pop();
    }
}

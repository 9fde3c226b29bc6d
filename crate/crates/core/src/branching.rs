//! Restriction of polynomial `GL(n)`-modules to `Sp(2k)`, `O(n)` and `SO(n)`.
//!
//! The fast path is [`trivial_multiplicity`], a parity test on the highest
//! weight. The full signed decomposition ([`branch_to_sp`], [`branch_to_o`])
//! sums Littlewood–Richardson coefficients against even shapes and then
//! rewrites inadmissible labels by boundary-hook removal. It is slow and exists
//! to cross-check the fast path.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupId, GroupKind};
use crate::partition::{
    enumerate_partitions, has_even_columns, is_even_partition, is_odd_partition, remove_boundary_hook, Partition,
};
use crate::symfunc::lr_coefficient;

/// Which span of a removed hook enters the sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookDepth {
    Columns,
    Rows,
}

/// Sign `(-1)^(depth + offset)` attached to one hook removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignConvention {
    pub depth: HookDepth,
    pub offset: u32,
}

impl SignConvention {
    /// `(-1)^(x+1)` with `x` the number of columns of the hook.
    pub const SP_AS_PRINTED: Self = SignConvention { depth: HookDepth::Columns, offset: 1 };
    /// `(-1)^x · ε` with `x` the number of columns of the hook.
    pub const O_AS_PRINTED: Self = SignConvention { depth: HookDepth::Columns, offset: 0 };
    /// Sign that agrees with Weyl-character branching for `Sp(2k)`.
    /// Equal to `(-1)^columns` because the hook length is even.
    pub const SP_PINNED: Self = SignConvention { depth: HookDepth::Rows, offset: 1 };
    /// Sign that agrees with Weyl-character branching for `O(n)`.
    pub const O_PINNED: Self = SignConvention { depth: HookDepth::Columns, offset: 1 };

    fn sign(self, columns: u32, rows: u32) -> i64 {
        let x = match self.depth {
            HookDepth::Columns => columns,
            HookDepth::Rows => rows,
        };
        if (x + self.offset) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// One summand `multiplicity · ε^epsilon_power · V_[mu]` of a restriction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BranchTerm {
    pub mu: Partition,
    pub multiplicity: i64,
    /// Power of the determinant character; always 0 for `Sp` and for the
    /// `SO` view.
    pub epsilon_power: u8,
}

impl fmt::Display for BranchTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*", self.multiplicity)?;
        if self.epsilon_power == 1 {
            write!(f, "e")?;
        }
        write!(f, "{}", self.mu)
    }
}

/// How `O(n)` labels are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthogonalView {
    /// Keep the determinant marker ε.
    Full,
    /// Restrict further to `SO(n)`: set ε = 1.
    Special,
}

/// Dimension of the invariants of the irreducible `V^n_λ`, read off the
/// highest weight.
pub fn trivial_multiplicity(lambda: &Partition, g: GroupId) -> Result<u32> {
    let n = g.n();
    lambda.check_length(n)?;
    let fixed = match g.kind() {
        GroupKind::Sp => has_even_columns(lambda, n)?,
        GroupKind::O => is_even_partition(lambda),
        GroupKind::SO => is_even_partition(lambda) || is_odd_partition(lambda, n)?,
    };
    Ok(u32::from(fixed))
}

/// Restriction of `V^{2k}_λ` to `Sp(2k)`, merged and with all labels of at
/// most `k` rows.
pub fn branch_to_sp(lambda: &Partition, k: usize) -> Result<Vec<BranchTerm>> {
    branch_to_sp_with(lambda, k, SignConvention::SP_PINNED)
}

pub fn branch_to_sp_with(lambda: &Partition, k: usize, sign: SignConvention) -> Result<Vec<BranchTerm>> {
    let n = 2 * k;
    lambda.check_length(n)?;
    let mut acc = BTreeMap::new();
    for (mu, c) in lr_against_even(lambda, true) {
        if let Some((label, s, _)) = modify(mu, k, |p| 2 * p as i64 - n as i64 - 2, sign) {
            *acc.entry((label, 0)).or_insert(0) += s * c;
        }
    }
    Ok(collect(acc))
}

/// Restriction of `V^n_λ` to `O(n)` (or to `SO(n)` in the `Special` view).
pub fn branch_to_o(lambda: &Partition, n: usize, view: OrthogonalView) -> Result<Vec<BranchTerm>> {
    branch_to_o_with(lambda, n, view, SignConvention::O_PINNED)
}

pub fn branch_to_o_with(
    lambda: &Partition,
    n: usize,
    view: OrthogonalView,
    sign: SignConvention,
) -> Result<Vec<BranchTerm>> {
    lambda.check_length(n)?;
    let k = n / 2;
    let column = Partition::column(n);
    let mut acc = BTreeMap::new();
    for (mu, c) in lr_against_even(lambda, false) {
        let rewritten = if view == OrthogonalView::Special && mu == column {
            // the determinant is trivial on SO(n)
            Some((Partition::empty(), 1, 0))
        } else {
            modify(mu, k, |p| 2 * p as i64 - n as i64, sign)
        };
        if let Some((label, s, eps)) = rewritten {
            // for n = 2k a label with k rows is fixed by tensoring with ε
            let self_associate = n % 2 == 0 && k > 0 && label.len() == k;
            let eps = if view == OrthogonalView::Full && !self_associate { eps } else { 0 };
            *acc.entry((label, eps)).or_insert(0) += s * c;
        }
    }
    Ok(collect(acc))
}

/// Trivial multiplicity recomputed from the full branching decomposition.
/// Only `Sp` and `SO` are supported; `O` needs the ε bookkeeping the
/// decomposition does not resolve.
pub fn trivial_multiplicity_via_branching(lambda: &Partition, g: GroupId) -> Result<i64> {
    let terms = match g.kind() {
        GroupKind::Sp => branch_to_sp(lambda, g.rank())?,
        GroupKind::SO => branch_to_o(lambda, g.n(), OrthogonalView::Special)?,
        GroupKind::O => return Err(Error::UsePredicatePath),
    };
    Ok(terms.iter().filter(|t| t.mu.is_empty() && t.epsilon_power == 0).map(|t| t.multiplicity).sum())
}

/// All `(μ, c^λ_{μ,ν})` with `ν` even (`columns = false`) or with even
/// columns (`columns = true`), `c ≠ 0`. Repeated `μ` are not merged.
fn lr_against_even(lambda: &Partition, columns: bool) -> Vec<(Partition, i64)> {
    let size = lambda.size() as u32;
    let mut out = Vec::new();
    for half in 0..=size / 2 {
        let rest = size - 2 * half;
        for delta in enumerate_partitions(half, (half as usize).max(1)) {
            let doubled = delta.doubled();
            let nu = if columns { doubled.conjugate() } else { doubled };
            if !lambda.contains(&nu) {
                continue;
            }
            for mu in enumerate_partitions(rest, lambda.len().max(1)) {
                if !lambda.contains(&mu) {
                    continue;
                }
                let c = lr_coefficient(lambda, &mu, &nu);
                if c != 0 {
                    out.push((mu, c as i64));
                }
            }
        }
    }
    out
}

/// Applies the modification rule until the label has at most `k` rows.
/// Returns the label, the accumulated sign and the parity of the number of
/// removals, or `None` when the label vanishes.
fn modify<F>(mut mu: Partition, k: usize, hook_len: F, sign: SignConvention) -> Option<(Partition, i64, u8)>
where
    F: Fn(usize) -> i64,
{
    let mut s = 1i64;
    let mut steps = 0u8;
    while mu.len() > k {
        let len = hook_len(mu.len());
        if len <= 0 {
            return None;
        }
        let removal = remove_boundary_hook(&mu, len as usize)?;
        s *= sign.sign(removal.columns_spanned, removal.rows_spanned);
        steps ^= 1;
        mu = removal.result;
    }
    Some((mu, s, steps))
}

fn collect(acc: BTreeMap<(Partition, u8), i64>) -> Vec<BranchTerm> {
    acc.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|((mu, epsilon_power), multiplicity)| BranchTerm { mu, multiplicity, epsilon_power })
        .collect()
}

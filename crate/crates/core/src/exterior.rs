//! Hilbert polynomials of `Λ(S²V)^G` and `Λ(Λ²V)^G`.
//!
//! Both exterior algebras are multiplicity free as `GL(n)`-modules, with one
//! irreducible per strict tuple `α`, so the invariants can be counted shape by
//! shape ([`exterior_invariant_poly`]). [`closed_form_exterior`] evaluates the
//! finite summation formulas instead.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::branching::trivial_multiplicity;
use crate::error::{Error, Result};
use crate::group::{GroupId, GroupKind};
use crate::partition::{enumerate_strict_partitions, FrobeniusCoords, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExteriorKind {
    /// `Λ(S²V)`.
    Sym2,
    /// `Λ(Λ²V)`.
    Alt2,
}

impl ExteriorKind {
    pub fn name(self) -> &'static str {
        match self {
            ExteriorKind::Sym2 => "sym2",
            ExteriorKind::Alt2 => "alt2",
        }
    }

    /// Top exterior degree, `dim S²V` or `dim Λ²V`.
    pub fn degree_bound(self, n: usize) -> usize {
        match self {
            ExteriorKind::Sym2 => n * (n + 1) / 2,
            ExteriorKind::Alt2 => n * n.saturating_sub(1) / 2,
        }
    }
}

impl FromStr for ExteriorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sym2" => Ok(ExteriorKind::Sym2),
            "alt2" => Ok(ExteriorKind::Alt2),
            _ => Err(Error::InvalidGroup(alloc::format!("unknown exterior kind {s:?}"))),
        }
    }
}

/// A polynomial in `t` with nonnegative coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HilbertPolynomial {
    coeffs: Vec<u64>,
}

impl HilbertPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(a.checked_mul(*b).expect("coefficient overflow")).expect("coefficient overflow");
            }
        }
        Self::from_coeffs(out)
    }

    fn add_monomial(&mut self, d: usize) {
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, 0);
        }
        self.coeffs[d] += 1;
    }

    /// Lowest positive degree with a nonzero coefficient, and that coefficient.
    pub fn lowest_positive(&self) -> Option<(usize, u64)> {
        self.coeffs.iter().enumerate().skip(1).find(|(_, &c)| c != 0).map(|(d, &c)| (d, c))
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Irreducible summands of the `i`-th exterior power, as highest weights
/// with `|λ| = 2i`.
///
/// `Λ^i(S²V)`: `λ = (α+1 | α)` with `|α| + p = i`.
/// `Λ^i(Λ²V)`: `λ = (α-1 | α)` with `α_p > 0` and `|α| = i`.
/// In both cases `α` is strict with `α_1 ≤ n - 1`.
pub fn exterior_decomposition(kind: ExteriorKind, n: usize, i: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        if i == 0 {
            out.push(Partition::empty());
        }
        return out;
    }
    for p in 0..=n {
        let positive = kind == ExteriorKind::Alt2;
        for alpha in enumerate_strict_partitions(n as u32 - 1, p, positive) {
            let size: usize = alpha.iter().map(|&a| a as usize).sum();
            let arms: Vec<u32> = match kind {
                ExteriorKind::Sym2 if size + p == i => alpha.iter().map(|a| a + 1).collect(),
                ExteriorKind::Alt2 if size == i => alpha.iter().map(|a| a - 1).collect(),
                _ => continue,
            };
            let f = FrobeniusCoords::new(arms, alpha).expect("shifted strict tuples are strict");
            out.push(f.to_partition());
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Counts, degree by degree, the summands with a `G`-invariant.
pub fn exterior_invariant_poly(kind: ExteriorKind, g: GroupId) -> Result<HilbertPolynomial> {
    let n = g.n();
    let mut coeffs = Vec::new();
    for i in 0..=kind.degree_bound(n) {
        let mut c = 0;
        for lambda in exterior_decomposition(kind, n, i) {
            c += u64::from(trivial_multiplicity(&lambda, g)?);
        }
        coeffs.push(c);
    }
    Ok(HilbertPolynomial::from_coeffs(coeffs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Constraint {
    AtMost,
    Exactly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Weights {
    /// `2a_1 + 4a_2 + ⋯`
    Even,
    /// `a_1 + 3a_2 + ⋯`
    Odd,
}

/// `Σ_{p} t^{p(p+1)/2} Σ_a t^{w·a}` over `p ≡ p_parity`, `p_min ≤ p ≤ n - p_gap`,
/// and tuples `a` of length `vars(p)` with `Σa ≤ n - p - bound_gap` (or `=`),
/// every `a_j` even except possibly the last, whose parity is `last`.
#[derive(Clone, Copy, Debug)]
struct Family {
    p_parity: Parity,
    p_min: usize,
    p_gap: usize,
    vars: fn(usize) -> usize,
    weights: Weights,
    constraint: Constraint,
    bound_gap: usize,
    last: Parity,
}

struct ClosedForm {
    /// Degrees of the leading monomials (`1`, or `1 + t`).
    base: &'static [usize],
    families: &'static [Family],
}

const fn fam(
    p_parity: Parity,
    p_min: usize,
    p_gap: usize,
    vars: fn(usize) -> usize,
    weights: Weights,
    constraint: Constraint,
    bound_gap: usize,
    last: Parity,
) -> Family {
    Family { p_parity, p_min, p_gap, vars, weights, constraint, bound_gap, last }
}

fn half(p: usize) -> usize {
    p / 2
}

fn half_up(p: usize) -> usize {
    p.div_ceil(2)
}

use Constraint::{AtMost, Exactly};
use Parity::{Even, Odd};

const SYM2_O: ClosedForm = ClosedForm {
    base: &[0, 1],
    families: &[
        fam(Even, 2, 0, half, Weights::Even, AtMost, 0, Odd),
        fam(Odd, 3, 0, half, Weights::Even, AtMost, 0, Even),
    ],
};

const SYM2_SP: ClosedForm = ClosedForm { base: &[0], families: &[fam(Even, 2, 0, half, Weights::Even, AtMost, 0, Even)] };

const SYM2_SO_EVEN: ClosedForm = ClosedForm {
    base: &[0, 1],
    families: &[
        fam(Even, 2, 0, half, Weights::Even, AtMost, 0, Odd),
        fam(Odd, 3, 0, half, Weights::Even, AtMost, 0, Even),
        fam(Odd, 1, 0, half_up, Weights::Odd, Exactly, 0, Odd),
        fam(Even, 2, 0, half, Weights::Odd, Exactly, 0, Even),
    ],
};

const ALT2_O: ClosedForm = ClosedForm { base: &[0], families: &[fam(Even, 2, 1, half, Weights::Even, AtMost, 1, Even)] };

const ALT2_SP: ClosedForm = ClosedForm {
    base: &[0, 1],
    families: &[
        fam(Even, 2, 1, half, Weights::Even, AtMost, 1, Odd),
        fam(Odd, 3, 1, half, Weights::Even, AtMost, 1, Even),
    ],
};

const ALT2_SO_EVEN: ClosedForm = ClosedForm {
    base: &[0],
    families: &[
        fam(Even, 2, 1, half, Weights::Even, AtMost, 1, Even),
        fam(Odd, 1, 1, half_up, Weights::Odd, Exactly, 1, Even),
    ],
};

fn closed_form_table(kind: ExteriorKind, g: GroupId) -> &'static ClosedForm {
    let even = g.n() % 2 == 0;
    match (kind, g.kind()) {
        (ExteriorKind::Sym2, GroupKind::O) => &SYM2_O,
        (ExteriorKind::Sym2, GroupKind::SO) if even => &SYM2_SO_EVEN,
        (ExteriorKind::Sym2, GroupKind::SO) => &SYM2_O,
        (ExteriorKind::Sym2, GroupKind::Sp) => &SYM2_SP,
        (ExteriorKind::Alt2, GroupKind::O) => &ALT2_O,
        (ExteriorKind::Alt2, GroupKind::SO) if even => &ALT2_SO_EVEN,
        (ExteriorKind::Alt2, GroupKind::SO) => &ALT2_O,
        (ExteriorKind::Alt2, GroupKind::Sp) => &ALT2_SP,
    }
}

/// The finite summation formulas, one table per kind and group.
pub fn closed_form_exterior(kind: ExteriorKind, g: GroupId) -> HilbertPolynomial {
    let n = g.n();
    let form = closed_form_table(kind, g);
    let mut out = HilbertPolynomial::default();
    for &d in form.base {
        out.add_monomial(d);
    }
    for fam in form.families {
        let mut p = fam.p_min;
        while p + fam.p_gap <= n {
            let matches = (p % 2 == 0) == (fam.p_parity == Even);
            if matches && n >= p + fam.bound_gap {
                let bound = n - p - fam.bound_gap;
                let vars = (fam.vars)(p);
                let weights: Vec<usize> = (1..=vars)
                    .map(|j| match fam.weights {
                        Weights::Even => 2 * j,
                        Weights::Odd => 2 * j - 1,
                    })
                    .collect();
                let mut tuple = Vec::with_capacity(vars);
                sum_tuples(fam, &weights, bound, 0, &mut tuple, &mut |w| out.add_monomial(p * (p + 1) / 2 + w));
            }
            p += 1;
        }
    }
    out
}

/// Visits every admissible tuple, passing its weighted degree.
fn sum_tuples<F: FnMut(usize)>(fam: &Family, weights: &[usize], bound: usize, used: usize, tuple: &mut Vec<usize>, visit: &mut F) {
    let j = tuple.len();
    if j == weights.len() {
        let ok = match fam.constraint {
            AtMost => used <= bound,
            Exactly => used == bound,
        };
        if ok {
            visit(tuple.iter().zip(weights).map(|(a, w)| a * w).sum());
        }
        return;
    }
    let parity = if j + 1 == weights.len() { fam.last } else { Even };
    let start = if parity == Even { 0 } else { 1 };
    let mut a = start;
    while used + a <= bound {
        tuple.push(a);
        sum_tuples(fam, weights, bound, used + a, tuple, visit);
        tuple.pop();
        a += 2;
    }
}

/// `Π (1 + t^d)`: the Hilbert polynomial of a free exterior algebra.
pub fn exterior_generator_product(degrees: &[usize]) -> HilbertPolynomial {
    degrees.iter().fold(HilbertPolynomial::one(), |acc, &d| {
        let mut factor = vec![0; d + 1];
        factor[0] = 1;
        factor[d] += 1;
        acc.mul(&HilbertPolynomial::from_coeffs(factor))
    })
}

/// Generator degrees when the invariant algebra is known to be a free
/// exterior algebra.
pub fn known_generator_degrees(kind: ExteriorKind, g: GroupId) -> Option<Vec<usize>> {
    let n = g.n();
    let k = n / 2;
    let arithmetic = |count: usize| (0..count).map(|i| 4 * i + 3).collect::<Vec<_>>();
    match (kind, g.kind()) {
        (ExteriorKind::Sym2, GroupKind::Sp) => Some(arithmetic(k)),
        (ExteriorKind::Alt2, GroupKind::O) if n % 2 == 0 => Some(arithmetic(k.saturating_sub(1))),
        (ExteriorKind::Alt2, GroupKind::O | GroupKind::SO) if n % 2 == 1 => Some(arithmetic(k)),
        (ExteriorKind::Alt2, GroupKind::SO) => {
            let mut d = arithmetic(k - 1);
            d.push(2 * k - 1);
            d.sort_unstable();
            Some(d)
        }
        _ => None,
    }
}

//! Sparse polynomials with exact coefficients and the Schur-function toolkit.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Exponent vector. Entries may be negative when the polynomial is used as a
/// Laurent polynomial (torus characters).
pub type Exponent = Vec<i32>;

/// Sparse polynomial in a fixed number of variables over `Z`.
///
/// Terms are kept in lexicographic order of their exponent vectors, so the
/// last term is the lex-leading one. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let mut p = SymPoly::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    /// Collects terms, summing repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut p = SymPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub(crate) fn coeff_ref(&self, exp: &[i32]) -> Option<&BigInt> {
        self.terms.get(exp)
    }

    /// Lex-greatest term.
    pub fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent length does not match variable count");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &SymPoly, scale: &BigInt) {
        assert_eq!(self.nvars, other.nvars);
        if scale.is_zero() {
            return;
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * scale);
        }
    }

    /// `self += scale · x^shift · other`.
    pub fn add_shifted(&mut self, other: &SymPoly, shift: &[i32], scale: &BigInt) {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(shift.len(), self.nvars);
        for (e, c) in &other.terms {
            let exp = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(exp, c * scale);
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        out.add_scaled(self, scale);
        out
    }

    /// Total degrees occurring, ascending and deduplicated.
    pub fn total_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|e| e.iter().map(|&x| i64::from(x)).sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Invariance of the coefficient function under permutations of the
    /// variables, checked on adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                if e[i] == e[i + 1] {
                    return true;
                }
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// Replaces every exponent vector through `f`; colliding images are summed.
    pub fn map_exponents<F>(&self, nvars: usize, mut f: F) -> SymPoly
    where
        F: FnMut(&[i32]) -> Exponent,
    {
        SymPoly::from_terms(nvars, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Substitutes `x_var = value`, removing that variable.
    pub fn specialize(&self, var: usize, value: i64) -> SymPoly {
        assert!(var < self.nvars);
        let value = BigInt::from(value);
        SymPoly::from_terms(
            self.nvars - 1,
            self.terms.iter().map(|(e, c)| {
                let k = e[var];
                assert!(k >= 0 || !value.is_zero(), "negative power of zero");
                let factor = if k >= 0 {
                    num_traits::pow(value.clone(), k as usize)
                } else {
                    // only ±1 may appear with negative exponents here
                    assert!(value.abs().is_one(), "negative power of {value}");
                    num_traits::pow(value.clone(), (-k) as usize)
                };
                let mut rest = e.clone();
                rest.remove(var);
                (rest, c * factor)
            }),
        )
    }

    /// Evaluates at an integer point, with `0^0 = 1`.
    pub fn evaluate(&self, point: &[i64]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut total = BigInt::zero();
        'terms: for (e, c) in &self.terms {
            let mut v = c.clone();
            for (&k, &x) in e.iter().zip(point) {
                if k == 0 {
                    continue;
                }
                assert!(k > 0, "evaluate needs nonnegative exponents");
                if x == 0 {
                    continue 'terms;
                }
                v *= num_traits::pow(BigInt::from(x), k as usize);
            }
            total += v;
        }
        total
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scaled(&-BigInt::one())
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = SymPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_shifted(rhs, e, c);
        }
        out
    }
}

/// Memo table for Schur polynomials keyed by `(n, λ)`.
///
/// One cache per thread; results do not depend on the cache contents.
#[derive(Debug, Default)]
pub struct SchurCache {
    polys: BTreeMap<(usize, Partition), SymPoly>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ(x_1, …, x_n)`.
    pub fn schur(&mut self, lambda: &Partition, n: usize) -> Result<&SymPoly> {
        lambda.check_length(n)?;
        self.ensure(lambda, n);
        Ok(&self.polys[&(n, lambda.clone())])
    }

    fn ensure(&mut self, lambda: &Partition, n: usize) {
        let key = (n, lambda.clone());
        if self.polys.contains_key(&key) {
            return;
        }
        let poly = if n == 0 {
            SymPoly::one(0)
        } else if n == 1 {
            SymPoly::monomial(vec![lambda.part(0) as i32], BigInt::one())
        } else {
            // branching s_λ(x_1..x_n) = Σ_{μ ≺ λ} s_μ(x_1..x_{n-1}) x_n^{|λ|-|μ|}
            let subs = interlacing(lambda, n);
            for mu in &subs {
                self.ensure(mu, n - 1);
            }
            let mut out = SymPoly::zero(n);
            let size = lambda.size() as i32;
            for mu in &subs {
                let inner = &self.polys[&(n - 1, mu.clone())];
                let last = size - mu.size() as i32;
                for (e, c) in inner.terms() {
                    let mut exp = e.clone();
                    exp.push(last);
                    out.add_term(exp, c.clone());
                }
            }
            out
        };
        self.polys.insert(key, poly);
    }
}

/// Partitions `μ` with at most `n - 1` parts interlacing `λ` (padded to `n`):
/// `λ_{i+1} ≤ μ_i ≤ λ_i`.
fn interlacing(lambda: &Partition, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n - 1);
    fn go(lambda: &Partition, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == n - 1 {
            out.push(Partition::from_decreasing(cur.clone()));
            return;
        }
        for m in lambda.part(i + 1)..=lambda.part(i) {
            cur.push(m);
            go(lambda, n, cur, out);
            cur.pop();
        }
    }
    go(lambda, n, &mut cur, &mut out);
    out
}

/// `s_λ(x_1, …, x_n)` as a monomial expansion.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Result<SymPoly> {
    SchurCache::new().schur(lambda, n).cloned()
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
///
/// Counts Gelfand–Tsetlin patterns: strip the largest letter, whose boxes form
/// a horizontal strip `λ/ν` of size `μ_last`.
pub fn kostka_number(lambda: &Partition, content: &[u32]) -> Result<BigInt> {
    let total: u64 = content.iter().map(|&c| u64::from(c)).sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: total });
    }
    let mut memo = BTreeMap::new();
    Ok(kostka_rec(lambda, content, &mut memo))
}

fn kostka_rec(lambda: &Partition, content: &[u32], memo: &mut BTreeMap<(Partition, usize), BigInt>) -> BigInt {
    let m = content.len();
    if m == 0 {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    if lambda.len() > m {
        return BigInt::zero();
    }
    let key = (lambda.clone(), m);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let want = lambda.size() - u64::from(content[m - 1]);
    let mut total = BigInt::zero();
    // ν interlaces λ with at most m - 1 parts
    for nu in interlacing(lambda, lambda.len().max(1).max(m)) {
        if nu.size() == want && nu.len() < m.max(1) {
            total += kostka_rec(&nu, &content[..m - 1], memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Expansion `Σ c_λ s_λ` of a symmetric polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    nvars: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new(nvars: usize) -> Self {
        SchurExpansion { nvars, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, lambda: Partition, c: BigInt) -> Result<()> {
        lambda.check_length(self.nvars)?;
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_polynomial(&self, cache: &mut SchurCache) -> Result<SymPoly> {
        let mut out = SymPoly::zero(self.nvars);
        for (lambda, c) in &self.coeffs {
            out.add_scaled(cache.schur(lambda, self.nvars)?, c);
        }
        Ok(out)
    }
}

/// Decomposes a symmetric polynomial into Schur polynomials by repeatedly
/// subtracting the Schur polynomial of the lex-leading exponent.
pub fn schur_expand(f: &SymPoly) -> Result<SchurExpansion> {
    schur_expand_with(&mut SchurCache::new(), f)
}

pub fn schur_expand_with(cache: &mut SchurCache, f: &SymPoly) -> Result<SchurExpansion> {
    let n = f.nvars();
    let mut rest = f.clone();
    let mut out = SchurExpansion::new(n);
    while let Some((e, c)) = rest.leading() {
        let lambda = exponent_partition(e).ok_or_else(|| Error::NotSymmetric(e.clone()))?;
        let c = c.clone();
        rest.add_scaled(cache.schur(&lambda, n)?, &-&c);
        out.add(lambda, c)?;
    }
    Ok(out)
}

/// Schur coefficients of a symmetric polynomial read off the alternant
/// `a_δ · f`: `c_λ = Σ_σ sgn(σ) [x^{λ+δ-σ(δ)}] f`.
///
/// Agrees with [`schur_expand`] and avoids building any Schur polynomial.
pub fn schur_expand_alternant(f: &SymPoly) -> Result<SchurExpansion> {
    let n = f.nvars();
    if !f.is_symmetric() {
        let e = f.terms().map(|(e, _)| e).find(|e| exponent_partition(e).is_none());
        return Err(Error::NotSymmetric(e.cloned().unwrap_or_default()));
    }
    if let Some((e, _)) = f.terms().find(|(e, _)| e.iter().any(|&k| k < 0)) {
        return Err(Error::NotSymmetric(e.clone()));
    }
    let perms = signed_permutations(n);
    let mut out = SchurExpansion::new(n);
    let mut probe = vec![0i32; n];
    for degree in f.total_degrees() {
        for lambda in enumerate_partitions(degree as u32, n) {
            let mut c = BigInt::zero();
            for (perm, sign) in &perms {
                // exponent λ + δ - σ(δ), δ = (n-1, …, 0)
                let mut ok = true;
                for i in 0..n {
                    let v = lambda.part(i) as i32 + (n - 1 - i) as i32 - (n - 1 - perm[i]) as i32;
                    if v < 0 {
                        ok = false;
                        break;
                    }
                    probe[i] = v;
                }
                if !ok {
                    continue;
                }
                if let Some(x) = f.coeff_ref(&probe) {
                    if *sign {
                        c += x;
                    } else {
                        c -= x;
                    }
                }
            }
            out.add(lambda, c)?;
        }
    }
    Ok(out)
}

/// All permutations of `0..n` paired with `true` for even ones.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, even: bool, out: &mut Vec<(Vec<usize>, bool)>) -> bool {
        // returns the parity after generating all permutations of the first k
        if k <= 1 {
            out.push((cur.clone(), even));
            return even;
        }
        let mut even = even;
        for i in 0..k - 1 {
            even = heap(k - 1, cur, even, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
            even = !even;
        }
        heap(k - 1, cur, even, out)
    }
    heap(n, &mut cur, true, &mut out);
    out
}

/// The exponent as a partition, if it is weakly decreasing and nonnegative.
fn exponent_partition(e: &[i32]) -> Option<Partition> {
    if e.iter().any(|&k| k < 0) || e.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(Partition::from_decreasing(e.iter().map(|&k| k as u32).collect()))
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`: the number of semistandard
/// fillings of `λ/ν` with content `μ` whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }
    let rows = lambda.len();
    // grid[r][c] holds the letter (1-based) placed in box (r, c) of λ/ν
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; lambda.part(r) as usize]).collect();
    let boxes: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (nu.part(r) as usize..lambda.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut used = vec![0u32; mu.len() + 1];
    let mut count = 0u64;
    lr_fill(0, &boxes, nu, mu, &mut grid, &mut used, &mut count);
    count
}

fn lr_fill(
    idx: usize,
    boxes: &[(usize, usize)],
    nu: &Partition,
    mu: &Partition,
    grid: &mut Vec<Vec<u32>>,
    used: &mut Vec<u32>,
    count: &mut u64,
) {
    if idx == boxes.len() {
        *count += 1;
        return;
    }
    let (r, c) = boxes[idx];
    // weakly increasing along the row: bounded by the box to the right
    let hi = if c + 1 < grid[r].len() { grid[r][c + 1] } else { mu.len() as u32 };
    // strictly increasing down the column
    let lo = if r > 0 && c >= nu.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
    // a letter in row r of a LR filling never exceeds r + 1
    let hi = hi.min(r as u32 + 1);
    for v in lo..=hi {
        let vi = v as usize;
        if used[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && used[vi] + 1 > used[vi - 1] {
            continue;
        }
        used[vi] += 1;
        grid[r][c] = v;
        lr_fill(idx + 1, boxes, nu, mu, grid, used, count);
        grid[r][c] = 0;
        used[vi] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> SymPoly {
        SymPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn schur_polynomial_examples() {
        assert_eq!(schur_polynomial(&p(&[1, 1]), 2).unwrap(), poly(2, &[(&[1, 1], 1)]));
        assert_eq!(
            schur_polynomial(&p(&[2]), 2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(
            schur_polynomial(&p(&[2, 1]), 2).unwrap(),
            poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_err());
        assert_eq!(schur_polynomial(&p(&[]), 3).unwrap(), SymPoly::one(3));
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&p(&[2, 1]), &[1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(kostka_number(&p(&[3, 2]), &[3, 2]).unwrap(), BigInt::one());
        assert_eq!(kostka_number(&p(&[1, 1]), &[2]).unwrap(), BigInt::zero());
        assert_eq!(kostka_number(&p(&[2, 2]), &[1, 1, 1, 1]).unwrap(), BigInt::from(2));
        assert!(kostka_number(&p(&[2]), &[1]).is_err());
    }

    #[test]
    fn kostka_matches_monomial_coefficients() {
        let mut cache = SchurCache::new();
        for size in 0..=6 {
            for lambda in enumerate_partitions(size, 3) {
                let s = cache.schur(&lambda, 3).unwrap().clone();
                for (e, c) in s.terms() {
                    let content: Vec<u32> = e.iter().map(|&k| k as u32).collect();
                    assert_eq!(&kostka_number(&lambda, &content).unwrap(), c, "{lambda} {e:?}");
                }
            }
        }
    }

    #[test]
    fn expand_examples() {
        let mut cache = SchurCache::new();
        let f = &cache.schur(&p(&[2]), 2).unwrap().clone() + &cache.schur(&p(&[1, 1]), 2).unwrap().scaled(&BigInt::from(3));
        let e = schur_expand(&f).unwrap();
        assert_eq!(e.coeff(&p(&[2])), BigInt::one());
        assert_eq!(e.coeff(&p(&[1, 1])), BigInt::from(3));
        assert_eq!(e.len(), 2);
        assert_eq!(schur_expand_alternant(&f).unwrap(), e);

        let g = poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]);
        let e = schur_expand(&g).unwrap();
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![(&p(&[2, 1]), &BigInt::one())]);
        assert!(schur_expand(&SymPoly::zero(2)).unwrap().is_empty());
        assert!(schur_expand_alternant(&SymPoly::zero(2)).unwrap().is_empty());
    }

    #[test]
    fn expand_rejects_asymmetric() {
        let f = poly(2, &[(&[0, 1], 1)]);
        assert!(matches!(schur_expand(&f), Err(Error::NotSymmetric(_))));
        assert!(matches!(schur_expand_alternant(&f), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[]), &p(&[2, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[]), &p(&[2, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[1, 1, 1]), &p(&[1, 1, 1]), &p(&[])), 1);
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        let even = perms.iter().filter(|(_, s)| *s).count();
        assert_eq!(even, 3);
        for (perm, sign) in &perms {
            let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            assert_eq!(inversions % 2 == 0, *sign, "{perm:?}");
        }
    }

    #[test]
    fn specialize_and_evaluate() {
        let f = poly(2, &[(&[2, 1], 3), (&[0, 1], -1)]);
        assert_eq!(f.specialize(0, -1), poly(1, &[(&[1], 2)]));
        assert_eq!(f.evaluate(&[0, 1]), BigInt::from(-1));
        assert_eq!(f.evaluate(&[2, 1]), BigInt::from(11));
    }
}

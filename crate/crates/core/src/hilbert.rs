//! Schur multiplicities of symmetric algebras `S(W)` and the Hilbert series of
//! their invariants.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::branching::trivial_multiplicity;
use crate::error::{Error, Result};
use crate::group::{GroupId, GroupKind};
use crate::partition::Partition;
use crate::series::TruncatedSeries;
use crate::symfunc::{schur_expand_alternant, SchurCache, SchurExpansion, SymPoly};

/// `W = ⊕ k(λ) V^n_λ`, components sorted by `λ` with merged multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    n: usize,
    components: Vec<(Partition, u32)>,
}

impl ModuleSpec {
    pub fn new<I>(n: usize, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, u32)>,
    {
        let mut merged: alloc::collections::BTreeMap<Partition, u32> = Default::default();
        for (lambda, k) in components {
            lambda.check_length(n)?;
            if k > 0 {
                *merged.entry(lambda).or_insert(0) += k;
            }
        }
        Ok(ModuleSpec { n, components: merged.into_iter().collect() })
    }

    /// The zero module.
    pub fn zero(n: usize) -> Self {
        ModuleSpec { n, components: Vec::new() }
    }

    /// A single irreducible with multiplicity one.
    pub fn irreducible(n: usize, lambda: Partition) -> Result<Self> {
        Self::new(n, [(lambda, 1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[(Partition, u32)] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

/// Character of `W`: `Σ k(λ) s_λ(x_1, …, x_n)`.
pub fn module_character(spec: &ModuleSpec, cache: &mut SchurCache) -> Result<SymPoly> {
    let mut out = SymPoly::zero(spec.n());
    for (lambda, k) in spec.components() {
        out.add_scaled(cache.schur(lambda, spec.n())?, &BigInt::from(*k));
    }
    Ok(out)
}

/// Characters of `S^0 W, …, S^maxdeg W`, from the product of `1/(1 - x^μ t)`
/// over the weights `μ` of `W` counted with multiplicity.
pub fn symmetric_algebra_characters(spec: &ModuleSpec, maxdeg: usize) -> Result<Vec<SymPoly>> {
    let n = spec.n();
    let weights = module_character(spec, &mut SchurCache::new())?;
    let mut series: Vec<SymPoly> = (0..=maxdeg).map(|_| SymPoly::zero(n)).collect();
    series[0] = SymPoly::one(n);
    let one = BigInt::one();
    for (mu, a) in weights.terms() {
        let a: u64 = a.try_into().map_err(|_| Error::Inconsistent(format!("weight multiplicity {a} of {mu:?}")))?;
        for _ in 0..a {
            // multiply by Σ_j x^{jμ} t^j, truncated: ascending l reuses the
            // already updated lower degree
            for l in 1..=maxdeg {
                let (lo, hi) = series.split_at_mut(l);
                let prev = &lo[l - 1];
                hi[0].add_shifted(prev, mu, &one);
            }
        }
    }
    Ok(series)
}

/// `m_l(λ)` for `l = 0..=maxdeg`: the Schur expansion of each `S^l W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    n: usize,
    rows: Vec<SchurExpansion>,
}

impl MultiplicityTable {
    pub fn from_rows(n: usize, rows: Vec<SchurExpansion>) -> Self {
        MultiplicityTable { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn maxdeg(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, l: usize) -> &SchurExpansion {
        &self.rows[l]
    }

    pub fn rows(&self) -> &[SchurExpansion] {
        &self.rows
    }

    /// `Σ_l Σ_λ m_l(λ) · f(λ) t^l`.
    pub fn weighted_series<F>(&self, mut f: F) -> Result<TruncatedSeries>
    where
        F: FnMut(&Partition) -> Result<u32>,
    {
        let mut out = TruncatedSeries::zero(self.maxdeg());
        for (l, row) in self.rows.iter().enumerate() {
            let mut c = BigInt::zero();
            for (lambda, m) in row.iter() {
                if f(lambda)? == 1 {
                    c += m;
                }
            }
            out.set(l, c);
        }
        Ok(out)
    }
}

/// One row of the multiplicity table; negative coefficients mean an internal
/// error.
pub fn expand_character(chi: &SymPoly) -> Result<SchurExpansion> {
    let row = schur_expand_alternant(chi)?;
    if let Some((lambda, c)) = row.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::Inconsistent(format!("negative multiplicity {c} at {lambda}")));
    }
    Ok(row)
}

pub fn multiplicity_table(spec: &ModuleSpec, maxdeg: usize) -> Result<MultiplicityTable> {
    let chars = symmetric_algebra_characters(spec, maxdeg)?;
    let rows = chars.iter().map(expand_character).collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable { n: spec.n(), rows })
}

fn check_group(spec: &ModuleSpec, g: GroupId) -> Result<()> {
    if spec.n() != g.n() {
        return Err(Error::InvalidGroup(format!("{g} does not act on a module for GL({})", spec.n())));
    }
    Ok(())
}

/// Hilbert series of `C[W]^G` by filtering the multiplicity table through
/// [`trivial_multiplicity`].
pub fn hilbert_series_invariants(spec: &ModuleSpec, g: GroupId, maxdeg: usize) -> Result<TruncatedSeries> {
    check_group(spec, g)?;
    invariants_from_table(&multiplicity_table(spec, maxdeg)?, g)
}

pub fn invariants_from_table(table: &MultiplicityTable, g: GroupId) -> Result<TruncatedSeries> {
    table.weighted_series(|lambda| trivial_multiplicity(lambda, g))
}

/// Hilbert series of `C[W]^G` by substituting into the multiplicity series.
///
/// * `Sp(2k)`: `M'` at `v = (0, 1, 0, 1, …, 0, 1)`.
/// * `O(n)`: `M` averaged over `x_i = ±1`, one variable at a time.
/// * `SO(n)`: `M'` averaged over `v_i = ±1` for `i < n`, then `v_n = 1`.
///
/// Here `M'` uses `v_i = x_1 ⋯ x_i`, so `x^λ = Π v_i^{λ_i - λ_{i+1}}`.
pub fn hilbert_series_via_substitution(spec: &ModuleSpec, g: GroupId, maxdeg: usize) -> Result<TruncatedSeries> {
    check_group(spec, g)?;
    substitution_from_table(&multiplicity_table(spec, maxdeg)?, g)
}

pub fn substitution_from_table(table: &MultiplicityTable, g: GroupId) -> Result<TruncatedSeries> {
    let n = table.n();
    let mut out = TruncatedSeries::zero(table.maxdeg());
    for (l, row) in table.rows().iter().enumerate() {
        let value = match g.kind() {
            GroupKind::Sp => {
                let point: Vec<i64> = (0..n).map(|i| (i % 2) as i64).collect();
                difference_form(row, n).evaluate(&point)
            }
            GroupKind::O => {
                let m = SymPoly::from_terms(
                    n,
                    row.iter().map(|(lambda, c)| (lambda.padded(n).unwrap().iter().map(|&x| x as i32).collect(), c.clone())),
                );
                average_all(m, n)?.coeff(&[])
            }
            GroupKind::SO => {
                let last = average_all(difference_form(row, n), n - 1)?;
                last.evaluate(&[1])
            }
        };
        out.set(l, value);
    }
    Ok(out)
}

/// `Σ_λ c_λ Π v_i^{λ_i - λ_{i+1}}` with `λ_{n+1} = 0`.
fn difference_form(row: &SchurExpansion, n: usize) -> SymPoly {
    SymPoly::from_terms(
        n,
        row.iter().map(|(lambda, c)| {
            let parts = lambda.padded(n).unwrap();
            let e = (0..n).map(|i| (parts[i] - parts.get(i + 1).copied().unwrap_or(0)) as i32).collect();
            (e, c.clone())
        }),
    )
}

/// Applies `f ↦ (f|_{y=-1} + f|_{y=1}) / 2` to the first `count` variables.
fn average_all(mut f: SymPoly, count: usize) -> Result<SymPoly> {
    for _ in 0..count {
        let sum = &f.specialize(0, -1) + &f.specialize(0, 1);
        let mut half = SymPoly::zero(sum.nvars());
        for (e, c) in sum.terms() {
            let (q, r) = c.div_rem(&BigInt::from(2));
            if !r.is_zero() {
                return Err(Error::Inconsistent(format!("odd coefficient {c} in a ±1 average")));
            }
            half.add_term(e.clone(), q);
        }
        f = half;
    }
    Ok(f)
}

/// Dimension of `V^n_λ` for `GL(n)`: `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn gl_dimension(lambda: &Partition, n: usize) -> Result<BigInt> {
    let parts = lambda.padded(n)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(i64::from(parts[i]) - i64::from(parts[j]) + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    Ok(num / den)
}

/// `dim S^l W` for every `l`, from the GL dimensions of the weights.
pub fn symmetric_power_dimensions(spec: &ModuleSpec, maxdeg: usize) -> Result<TruncatedSeries> {
    let mut dim = 0u64;
    for (lambda, k) in spec.components() {
        let d: u64 = gl_dimension(lambda, spec.n())?
            .try_into()
            .map_err(|_| Error::Inconsistent(format!("dimension of {lambda} out of range")))?;
        dim += d * u64::from(*k);
    }
    // dim S^l of a d-dimensional space is C(l + d - 1, d - 1)
    let mut s = TruncatedSeries::one(maxdeg).divide_by_cyclotomic_power(1, dim as usize);
    if dim == 0 {
        s = TruncatedSeries::one(maxdeg);
    }
    Ok(s)
}

/// `Σ_λ m_l(λ) dim V^n_λ` for every row.
pub fn table_dimensions(table: &MultiplicityTable) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::zero(table.maxdeg());
    for (l, row) in table.rows().iter().enumerate() {
        let mut total = BigInt::zero();
        for (lambda, m) in row.iter() {
            total += gl_dimension(lambda, table.n())? * m;
        }
        out.set(l, total);
    }
    Ok(out)
}

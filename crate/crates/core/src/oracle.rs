//! Independent checks: Weyl integration over a maximal torus for the connected
//! groups, Weyl-character branching, and a product-based LR coefficient.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupId, GroupKind};
use crate::hilbert::{symmetric_algebra_characters, ModuleSpec};
use crate::partition::Partition;
use crate::series::TruncatedSeries;
use crate::symfunc::{schur_expand, SchurCache, SymPoly};

/// Root systems of the connected classical groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    /// `SO(2k+1)`.
    B(usize),
    /// `Sp(2k)`.
    C(usize),
    /// `SO(2k)`.
    D(usize),
}

impl RootSystem {
    pub fn of(g: GroupId) -> Result<Self> {
        let k = g.rank();
        match g.kind() {
            GroupKind::Sp => Ok(RootSystem::C(k)),
            GroupKind::SO if g.n() % 2 == 1 => Ok(RootSystem::B(k)),
            GroupKind::SO => Ok(RootSystem::D(k)),
            GroupKind::O => Err(Error::NotConnected(format!("{g}"))),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            RootSystem::B(k) | RootSystem::C(k) | RootSystem::D(k) => k,
        }
    }

    /// Positive roots in the `e_i` basis.
    pub fn positive_roots(self) -> Vec<Vec<i32>> {
        let k = self.rank();
        let unit = |i: usize, c: i32| {
            let mut v = vec![0; k];
            v[i] = c;
            v
        };
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                out.push(minus);
                let mut plus = unit(i, 1);
                plus[j] = 1;
                out.push(plus);
            }
            match self {
                RootSystem::B(_) => out.push(unit(i, 1)),
                RootSystem::C(_) => out.push(unit(i, 2)),
                RootSystem::D(_) => {}
            }
        }
        out
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u64 {
        let k = self.rank() as u64;
        let fact: u64 = (1..=k).product();
        match self {
            RootSystem::B(_) | RootSystem::C(_) => (1u64 << k) * fact,
            RootSystem::D(0) => 1,
            RootSystem::D(_) => (1u64 << (k - 1)) * fact,
        }
    }

    /// Twice the half-sum of positive roots.
    fn two_rho(self) -> Vec<i64> {
        let k = self.rank();
        (0..k)
            .map(|i| {
                let r = (k - i) as i64;
                match self {
                    RootSystem::B(_) => 2 * r - 1,
                    RootSystem::C(_) => 2 * r,
                    RootSystem::D(_) => 2 * (r - 1),
                }
            })
            .collect()
    }

    /// Weyl dimension formula `Π_{α>0} ⟨μ+ρ, α⟩ / ⟨ρ, α⟩` for an integral
    /// highest weight (negative last entry allowed for type D).
    pub fn dimension(self, mu: &[i32]) -> BigInt {
        assert_eq!(mu.len(), self.rank());
        let rho2 = self.two_rho();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in self.positive_roots() {
            let mut a = 0i64;
            let mut b = 0i64;
            for i in 0..alpha.len() {
                a += (2 * i64::from(mu[i]) + rho2[i]) * i64::from(alpha[i]);
                b += rho2[i] * i64::from(alpha[i]);
            }
            num *= a;
            den *= b;
        }
        num / den
    }

    /// `Π_{α ∈ Φ} (1 - z^α)` over all roots.
    pub fn weyl_density(self) -> SymPoly {
        let k = self.rank();
        let mut out = SymPoly::one(k);
        for alpha in self.positive_roots() {
            for sign in [1, -1] {
                let e: Vec<i32> = alpha.iter().map(|&a| sign * a).collect();
                let factor = SymPoly::from_terms(k, [(vec![0; k], BigInt::one()), (e, -BigInt::one())]);
                out = &out * &factor;
            }
        }
        out
    }

    /// `Π_{α > 0} (1 - z^{-α})`.
    fn positive_factor(self) -> SymPoly {
        let k = self.rank();
        let mut out = SymPoly::one(k);
        for alpha in self.positive_roots() {
            let e: Vec<i32> = alpha.iter().map(|&a| -a).collect();
            let factor = SymPoly::from_terms(k, [(vec![0; k], BigInt::one()), (e, -BigInt::one())]);
            out = &out * &factor;
        }
        out
    }

    /// Weyl-group invariance: permutations and sign changes (an even number of
    /// them for type D).
    pub fn is_invariant(self, chi: &SymPoly) -> bool {
        let k = self.rank();
        if !chi.is_symmetric() {
            return false;
        }
        if k == 0 {
            return true;
        }
        chi.terms().all(|(e, c)| {
            let flip = |idx: &[usize]| {
                let mut f = e.clone();
                for &i in idx {
                    f[i] = -f[i];
                }
                chi.coeff(&f) == *c
            };
            match self {
                RootSystem::D(_) => k < 2 || flip(&[0, 1]),
                _ => flip(&[0]),
            }
        })
    }
}

/// A character of `G` restricted to its maximal torus (Laurent polynomial in
/// `rank` variables).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCharacter {
    pub roots: RootSystem,
    pub poly: SymPoly,
}

/// Restricts a `GL(n)` character: `x_i → z_i`, `x_{k+i} → z_i^{-1}`, and
/// `x_n → 1` when `n` is odd.
pub fn restrict_weights(chi: &SymPoly, g: GroupId) -> Result<TorusCharacter> {
    let roots = RootSystem::of(g)?;
    let n = g.n();
    if chi.nvars() != n {
        return Err(Error::VariableCount { expected: n, found: chi.nvars() });
    }
    let k = g.rank();
    let poly = chi.map_exponents(k, |e| (0..k).map(|i| e[i] - e[k + i]).collect());
    Ok(TorusCharacter { roots, poly })
}

/// `dim χ^G = CT(χ · Π_{α∈Φ}(1 - z^α)) / |W|`.
pub fn weyl_ct_trivial_multiplicity(chi: &TorusCharacter) -> Result<BigInt> {
    weyl_ct_with_density(chi, &chi.roots.weyl_density())
}

fn weyl_ct_with_density(chi: &TorusCharacter, density: &SymPoly) -> Result<BigInt> {
    let mut ct = BigInt::zero();
    let mut neg = vec![0i32; chi.roots.rank()];
    for (e, c) in chi.poly.terms() {
        for (slot, &x) in neg.iter_mut().zip(e) {
            *slot = -x;
        }
        if let Some(d) = density_coeff(density, &neg) {
            ct += c * d;
        }
    }
    let (q, r) = ct.div_rem(&BigInt::from(chi.roots.weyl_order()));
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("constant term {ct} not divisible by |W| = {}", chi.roots.weyl_order())));
    }
    Ok(q)
}

fn density_coeff(density: &SymPoly, e: &[i32]) -> Option<BigInt> {
    let c = density.coeff(e);
    (!c.is_zero()).then_some(c)
}

/// Degreewise Weyl integration over the characters of `S^l W`.
pub fn hilbert_series_weyl(spec: &ModuleSpec, g: GroupId, maxdeg: usize) -> Result<TruncatedSeries> {
    let roots = RootSystem::of(g)?;
    if spec.n() != g.n() {
        return Err(Error::VariableCount { expected: g.n(), found: spec.n() });
    }
    let density = roots.weyl_density();
    let mut out = TruncatedSeries::zero(maxdeg);
    for (l, chi) in symmetric_algebra_characters(spec, maxdeg)?.iter().enumerate() {
        out.set(l, weyl_ct_with_density(&restrict_weights(chi, g)?, &density)?);
    }
    Ok(out)
}

/// Multiplicities of the irreducibles of `G` in a torus character, keyed by
/// dominant highest weight. The coefficient of `z^μ` in
/// `χ · Π_{α>0}(1 - z^{-α})` at a dominant `μ` is the multiplicity of `V(μ)`.
pub fn weyl_branching_multiplicities(chi: &TorusCharacter) -> BTreeMap<Vec<i32>, BigInt> {
    let product = &chi.poly * &chi.roots.positive_factor();
    product.terms().filter(|(e, _)| is_dominant(chi.roots, e)).map(|(e, c)| (e.clone(), c.clone())).collect()
}

fn is_dominant(roots: RootSystem, e: &[i32]) -> bool {
    let k = e.len();
    if k == 0 {
        return true;
    }
    let chain = e.windows(2).all(|w| w[0] >= w[1]);
    match roots {
        RootSystem::B(_) | RootSystem::C(_) => chain && e[k - 1] >= 0,
        RootSystem::D(_) => chain && (k < 2 || e[k - 2] >= e[k - 1].abs()),
    }
}

/// Dimension of the irreducible `Sp(2k)`-module with label `μ` (at most `k`
/// rows).
pub fn sp_dimension(mu: &Partition, k: usize) -> Result<BigInt> {
    Ok(RootSystem::C(k).dimension(&signed(mu, k)?))
}

/// Dimension of the irreducible `SO(n)`-module with label `μ`, at most
/// `⌊n/2⌋` rows.
pub fn so_dimension(mu: &Partition, n: usize) -> Result<BigInt> {
    let g = GroupId::so(n)?;
    Ok(RootSystem::of(g)?.dimension(&signed(mu, g.rank())?))
}

/// Dimension of the irreducible `O(n)`-module `[μ]` with at most `⌊n/2⌋`
/// rows. For even `n` and `μ_k ≠ 0` it is the sum of two `SO` irreducibles.
pub fn o_dimension(mu: &Partition, n: usize) -> Result<BigInt> {
    let k = n / 2;
    let d = so_dimension(mu, n)?;
    Ok(if n % 2 == 0 && k > 0 && mu.part(k - 1) != 0 { d * 2 } else { d })
}

fn signed(mu: &Partition, k: usize) -> Result<Vec<i32>> {
    Ok(mu.padded(k)?.iter().map(|&x| x as i32).collect())
}

/// LR coefficient read from the Schur expansion of `s_μ · s_ν`.
pub fn lr_bruteforce(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let n = lambda.len().max(mu.len() + nu.len()).max(1);
    let mut cache = SchurCache::new();
    let a = cache.schur(mu, n).expect("length fits").clone();
    let b = cache.schur(nu, n).expect("length fits").clone();
    let expansion = schur_expand(&(&a * &b)).expect("products of Schur polynomials are symmetric");
    expansion.coeff(lambda).try_into().expect("LR coefficients are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::module_character;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> SymPoly {
        SymPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    fn spec(n: usize, parts: &[&[u32]]) -> ModuleSpec {
        ModuleSpec::new(n, parts.iter().map(|v| (p(v), 1))).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let sp2 = GroupId::sp(2).unwrap();
        let so3 = GroupId::so(3).unwrap();
        assert_eq!(restrict_weights(&poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]), sp2).unwrap().poly, poly(1, &[(&[1], 1), (&[-1], 1)]));
        assert_eq!(restrict_weights(&poly(2, &[(&[1, 1], 1)]), sp2).unwrap().poly, poly(1, &[(&[0], 1)]));
        assert_eq!(
            restrict_weights(&poly(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]), so3).unwrap().poly,
            poly(1, &[(&[1], 1), (&[0], 1), (&[-1], 1)])
        );
        assert!(matches!(restrict_weights(&poly(2, &[]), GroupId::o(2).unwrap()), Err(Error::NotConnected(_))));
    }

    #[test]
    fn ct_examples() {
        let sp2 = GroupId::sp(2).unwrap();
        let s2 = symmetric_algebra_characters(&spec(2, &[&[2]]), 2).unwrap();
        assert_eq!(weyl_ct_trivial_multiplicity(&restrict_weights(&s2[2], sp2).unwrap()).unwrap(), BigInt::one());
        for g in [sp2, GroupId::sp(4).unwrap(), GroupId::so(3).unwrap(), GroupId::so(4).unwrap(), GroupId::so(5).unwrap()] {
            let one = restrict_weights(&SymPoly::one(g.n()), g).unwrap();
            assert_eq!(weyl_ct_trivial_multiplicity(&one).unwrap(), BigInt::one(), "{g}");
        }
        let so3 = GroupId::so(3).unwrap();
        let v = module_character(&spec(3, &[&[1]]), &mut SchurCache::new()).unwrap();
        assert_eq!(weyl_ct_trivial_multiplicity(&restrict_weights(&v, so3).unwrap()).unwrap(), BigInt::zero());
    }

    #[test]
    fn series_examples() {
        let s = hilbert_series_weyl(&spec(2, &[&[2]]), GroupId::sp(2).unwrap(), 6).unwrap();
        assert_eq!(s, TruncatedSeries::from_i64(&[1, 0, 1, 0, 1, 0, 1]));
        let s = hilbert_series_weyl(&spec(3, &[&[1, 1]]), GroupId::so(3).unwrap(), 4).unwrap();
        assert_eq!(s, TruncatedSeries::from_i64(&[1, 0, 1, 0, 1]));
        // SO(2) is a torus; D_1 has no roots
        let s = hilbert_series_weyl(&spec(2, &[&[1]]), GroupId::so(2).unwrap(), 4).unwrap();
        assert_eq!(s, TruncatedSeries::from_i64(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(sp_dimension(&p(&[1]), 2).unwrap(), BigInt::from(4));
        assert_eq!(sp_dimension(&p(&[1, 1]), 2).unwrap(), BigInt::from(5));
        assert_eq!(sp_dimension(&p(&[2]), 2).unwrap(), BigInt::from(10));
        assert_eq!(so_dimension(&p(&[1]), 3).unwrap(), BigInt::from(3));
        assert_eq!(so_dimension(&p(&[1, 1]), 5).unwrap(), BigInt::from(10));
        assert_eq!(so_dimension(&p(&[1, 1]), 4).unwrap(), BigInt::from(3));
        assert_eq!(o_dimension(&p(&[1, 1]), 4).unwrap(), BigInt::from(6));
        assert_eq!(o_dimension(&p(&[2]), 4).unwrap(), BigInt::from(9));
        assert_eq!(RootSystem::D(2).dimension(&[1, -1]), BigInt::from(3));
    }

    #[test]
    fn invariance() {
        let g = GroupId::so(4).unwrap();
        let chi = restrict_weights(&module_character(&spec(4, &[&[2, 1]]), &mut SchurCache::new()).unwrap(), g).unwrap();
        assert!(chi.roots.is_invariant(&chi.poly));
        assert!(!RootSystem::C(1).is_invariant(&poly(1, &[(&[1], 1)])));
    }

    #[test]
    fn weyl_branching_example() {
        // V ⊗ V for Sp(2) is V(2) + V(0)
        let chi = restrict_weights(&poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]), GroupId::sp(2).unwrap()).unwrap();
        let m = weyl_branching_multiplicities(&chi);
        assert_eq!(m.len(), 2);
        assert_eq!(m[&vec![2]], BigInt::one());
        assert_eq!(m[&vec![0]], BigInt::one());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_bruteforce(&p(&[2, 2]), &p(&[1, 1]), &p(&[1, 1])), 1);
        assert_eq!(lr_bruteforce(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_bruteforce(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_bruteforce(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }
}

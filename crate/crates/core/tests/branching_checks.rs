use std::collections::BTreeMap;

use classinv_core::branching::{
    branch_to_o, branch_to_o_with, branch_to_sp, branch_to_sp_with, trivial_multiplicity,
    trivial_multiplicity_via_branching, BranchTerm, OrthogonalView, SignConvention,
};
use classinv_core::hilbert::gl_dimension;
use classinv_core::oracle::{
    o_dimension, restrict_weights, sp_dimension, weyl_branching_multiplicities, weyl_ct_trivial_multiplicity,
};
use classinv_core::partition::enumerate_partitions;
use classinv_core::{GroupId, Partition, SchurCache};
use num_bigint::BigInt;

fn shapes(max_size: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| enumerate_partitions(s, max_len)).collect()
}

/// Irreducible multiplicities of `V^n_λ` restricted to a connected group,
/// from Weyl characters.
fn weyl_branching(lambda: &Partition, g: GroupId, cache: &mut SchurCache) -> BTreeMap<Vec<i32>, BigInt> {
    let chi = restrict_weights(cache.schur(lambda, g.n()).unwrap(), g).unwrap();
    weyl_branching_multiplicities(&chi)
}

fn sp_terms_as_weights(terms: &[BranchTerm], k: usize) -> BTreeMap<Vec<i32>, BigInt> {
    terms
        .iter()
        .map(|t| (t.mu.padded(k).unwrap().iter().map(|&x| x as i32).collect(), BigInt::from(t.multiplicity)))
        .collect()
}

/// An `O(2k)` label with `μ_k ≠ 0` restricts to two `SO(2k)` irreducibles.
fn so_terms_as_weights(terms: &[BranchTerm], n: usize) -> BTreeMap<Vec<i32>, BigInt> {
    let k = n / 2;
    let mut out = BTreeMap::new();
    for t in terms {
        let w: Vec<i32> = t.mu.padded(k).unwrap().iter().map(|&x| x as i32).collect();
        *out.entry(w.clone()).or_insert_with(BigInt::default) += t.multiplicity;
        if n % 2 == 0 && k > 0 && w[k - 1] != 0 {
            let mut bar = w;
            bar[k - 1] = -bar[k - 1];
            *out.entry(bar).or_insert_with(BigInt::default) += t.multiplicity;
        }
    }
    out.retain(|_, v| *v != BigInt::default());
    out
}

#[test]
fn pinned_sp_sign_agrees_with_weyl_branching() {
    let mut cache = SchurCache::new();
    for k in 1..=2 {
        let g = GroupId::sp(2 * k).unwrap();
        for lambda in shapes(6, 2 * k) {
            let terms = branch_to_sp(&lambda, k).unwrap();
            assert_eq!(sp_terms_as_weights(&terms, k), weyl_branching(&lambda, g, &mut cache), "{lambda} Sp({})", 2 * k);
        }
    }
}

#[test]
fn printed_sp_sign_disagrees_with_weyl_branching() {
    let mut cache = SchurCache::new();
    let g = GroupId::sp(4).unwrap();
    let mismatches: Vec<Partition> = shapes(5, 4)
        .into_iter()
        .filter(|lambda| {
            let terms = branch_to_sp_with(lambda, 2, SignConvention::SP_AS_PRINTED).unwrap();
            sp_terms_as_weights(&terms, 2) != weyl_branching(lambda, g, &mut cache)
        })
        .collect();
    assert!(mismatches.contains(&Partition::column(4)), "{mismatches:?}");
}

#[test]
fn pinned_o_sign_agrees_with_weyl_branching_on_so() {
    let mut cache = SchurCache::new();
    for n in 2..=5 {
        let g = GroupId::so(n).unwrap();
        for lambda in shapes(6, n) {
            let terms = branch_to_o(&lambda, n, OrthogonalView::Special).unwrap();
            assert_eq!(so_terms_as_weights(&terms, n), weyl_branching(&lambda, g, &mut cache), "{lambda} SO({n})");
        }
    }
}

#[test]
fn printed_o_sign_disagrees_with_weyl_branching_on_so() {
    let mut cache = SchurCache::new();
    let g = GroupId::so(3).unwrap();
    let lambda = Partition::new(vec![2, 1, 1]).unwrap();
    let printed = branch_to_o_with(&lambda, 3, OrthogonalView::Special, SignConvention::O_AS_PRINTED).unwrap();
    assert_ne!(so_terms_as_weights(&printed, 3), weyl_branching(&lambda, g, &mut cache));
}

#[test]
fn full_view_forgets_to_special_view() {
    for n in 1..=4 {
        for lambda in shapes(6, n) {
            let mut merged: BTreeMap<Partition, i64> = BTreeMap::new();
            for t in branch_to_o(&lambda, n, OrthogonalView::Full).unwrap() {
                *merged.entry(t.mu).or_default() += t.multiplicity;
            }
            merged.retain(|_, m| *m != 0);
            let special: BTreeMap<Partition, i64> =
                branch_to_o(&lambda, n, OrthogonalView::Special).unwrap().into_iter().map(|t| (t.mu, t.multiplicity)).collect();
            assert_eq!(merged, special, "{lambda} n={n}");
        }
    }
}

#[test]
fn branching_reproduces_predicates() {
    for n in 1..=4 {
        let mut groups = vec![GroupId::so(n).unwrap()];
        if n % 2 == 0 {
            groups.push(GroupId::sp(n).unwrap());
        }
        for g in groups {
            for lambda in shapes(6, n) {
                let fast = trivial_multiplicity(&lambda, g).unwrap();
                let slow = trivial_multiplicity_via_branching(&lambda, g).unwrap();
                assert_eq!(i64::from(fast), slow, "{lambda} {g}");
            }
        }
    }
}

#[test]
fn sp_dimension_conservation() {
    for k in 1..=2 {
        for lambda in shapes(5, 2 * k) {
            let terms = branch_to_sp(&lambda, k).unwrap();
            let total: BigInt = terms.iter().map(|t| sp_dimension(&t.mu, k).unwrap() * t.multiplicity).sum();
            assert_eq!(total, gl_dimension(&lambda, 2 * k).unwrap(), "{lambda} k={k}");
            assert!(terms.iter().all(|t| t.multiplicity > 0 && t.mu.len() <= k));
        }
    }
}

#[test]
fn o_dimension_conservation() {
    for n in 2..=5 {
        for lambda in shapes(5, n) {
            let terms = branch_to_o(&lambda, n, OrthogonalView::Full).unwrap();
            let total: BigInt = terms.iter().map(|t| o_dimension(&t.mu, n).unwrap() * t.multiplicity).sum();
            assert_eq!(total, gl_dimension(&lambda, n).unwrap(), "{lambda} n={n}");
            assert!(terms.iter().all(|t| t.multiplicity > 0 && t.mu.len() <= n / 2), "{lambda} n={n} {terms:?}");
        }
    }
}

#[test]
fn weyl_integral_of_irreducibles_matches_predicates() {
    let mut cache = SchurCache::new();
    for n in 1..=5 {
        let mut groups = vec![GroupId::so(n).unwrap()];
        if n % 2 == 0 {
            groups.push(GroupId::sp(n).unwrap());
        }
        for g in groups {
            for lambda in shapes(6, n) {
                let chi = restrict_weights(cache.schur(&lambda, n).unwrap(), g).unwrap();
                assert!(chi.roots.is_invariant(&chi.poly), "{lambda} {g}");
                let ct = weyl_ct_trivial_multiplicity(&chi).unwrap();
                assert_eq!(ct, BigInt::from(trivial_multiplicity(&lambda, g).unwrap()), "{lambda} {g}");
            }
        }
    }
}

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use common::*;
use crystal_forge::character::character;
use crystal_forge::classify::{extremal_reps, is_demazure, is_extremal, is_ideal_global, is_ideal_local, is_principal};
use crystal_forge::demazure::{atomic_decomposition, demazure_crystal, ideal_subset};
use crystal_forge::select::select;
use crystal_forge::{build_tableau_crystal, CartanData, SubsetHandle, WeylGroup, Witness};

fn group(kind: &str, rank: usize) -> (WeylGroup, Vec<crystal_forge::WeylElement>) {
    let weyl = WeylGroup::new(Arc::new(CartanData::finite_type(kind, rank).unwrap()));
    let all = weyl.enumerate(10_000).unwrap();
    (weyl, all)
}

#[test]
fn bruhat_matches_subword_oracle() {
    for (kind, rank, order) in [("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("G", 2, 12)] {
        let (weyl, all) = group(kind, rank);
        assert_eq!(all.len(), order);
        for u in &all {
            assert_eq!(&rho_image(&weyl, u.word()), u.key());
            for w in &all {
                assert_eq!(
                    weyl.bruhat_leq(u, w),
                    bruhat_by_subwords(&weyl, u, w),
                    "{kind}{rank}: {u} vs {w}"
                );
            }
        }
    }
}

#[test]
fn min_coset_rep_matches_brute_force() {
    for (kind, rank) in [("A", 2), ("A", 3), ("B", 2), ("C", 3)] {
        let (weyl, all) = group(kind, rank);
        let r = rank as i64;
        for coords in [
            vec![1; rank],
            (0..r).map(|k| k % 2).collect(),
            (0..r).map(|k| (k == 0) as i64).collect(),
        ] {
            let lambda = crystal_forge::Weight::new(coords);
            for w in &all {
                assert_eq!(weyl.min_coset_rep(w, &lambda), brute_min_rep(&weyl, &all, w, &lambda));
            }
        }
    }
}

#[test]
fn every_reduced_word_reaches_the_element() {
    let (weyl, all) = group("A", 3);
    for w in &all {
        let words = weyl.reduced_words(w);
        assert!(words.contains(&w.word().to_vec()));
        for word in words {
            assert_eq!(word.len(), w.length());
            assert_eq!(&rho_image(&weyl, &word), w.key());
        }
    }
}

#[test]
fn b2_fundamental_crystals_load() {
    let v = b2_vector();
    assert_eq!(v.len() as u64, b2_dimension(1, 0));
    assert_eq!(v.extremal_elements(v.elements()).unwrap().len(), 4);
    let s = b2_spin();
    assert_eq!(s.len() as u64, b2_dimension(0, 1));
    assert_eq!(s.extremal_elements(s.elements()).unwrap().len(), 4);
    let t = b2_adjoint_like();
    assert_eq!(t.len() as u64, b2_dimension(1, 1));
    assert_eq!(t.lambda().unwrap().coords(), &[1, 1]);
    assert_eq!(t.extremal_elements(t.elements()).unwrap().len(), 8);
}

#[test]
fn b2_demazure_words_agree_with_definition() {
    let g = b2_adjoint_like();
    let weyl = g.weyl();
    for w in weyl.enumerate(100).unwrap() {
        let d = demazure_crystal(&g, &w).unwrap();
        for word in weyl.reduced_words(&w) {
            assert_eq!(&closure_by_definition(&g, &word), d.handle.members());
        }
    }
    let full = demazure_crystal(&g, &weyl.element(&[0, 1, 0, 1]).unwrap()).unwrap();
    assert_eq!(full.handle.len(), 16);
}

fn partition() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0u32..=3, n).prop_map(move |mut p| {
            p.sort_unstable_by(|a, b| b.cmp(a));
            (n, p)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn crystal_size_matches_dimension((n, shape) in partition()) {
        let g = build_tableau_crystal(n, &shape).unwrap();
        prop_assert_eq!(g.len() as u64, type_a_dimension(&shape, n));
        prop_assert_eq!(g.len() as u64, ssyt_count(&shape, n as u32));
        let full = character(&SubsetHandle::whole(&g));
        for (w, &m) in full.terms() {
            for i in g.cartan().nodes() {
                prop_assert_eq!(full.multiplicity(&g.cartan().reflect(i, w)), m);
            }
        }
    }

    #[test]
    fn demazure_closure_is_word_independent(word in prop::collection::vec(0usize..3, 0..8)) {
        let g = build_tableau_crystal(4, &[2, 1, 0]).unwrap();
        let weyl = g.weyl();
        let w = weyl.element(&word).unwrap();
        let d = demazure_crystal(&g, &w).unwrap();
        for rex in weyl.reduced_words(&w) {
            prop_assert_eq!(&closure_by_definition(&g, &rex), d.handle.members());
        }
    }

    #[test]
    fn atoms_partition_ideal_subsets(gens in prop::collection::vec(prop::collection::vec(0usize..3, 0..6), 1..4)) {
        let g = build_tableau_crystal(4, &[2, 1, 0]).unwrap();
        let weyl = g.weyl();
        let gens: Vec<_> = gens.iter().map(|w| weyl.element(w).unwrap()).collect();
        let ideal = weyl.lower_ideal(&gens);
        let atoms = atomic_decomposition(&g, &ideal).unwrap();
        let total: usize = atoms.iter().map(|a| a.handle.len()).sum();
        let union: BTreeSet<_> = atoms.iter().flat_map(|a| a.handle.iter()).collect();
        prop_assert_eq!(total, union.len());
        let target = ideal_subset(&g, &ideal).unwrap();
        prop_assert_eq!(&union, target.members());
    }

    #[test]
    fn ideal_tests_are_nested(mask in any::<u64>(), big in any::<bool>()) {
        let g = if big { build_tableau_crystal(4, &[2, 1, 0]) } else { build_tableau_crystal(3, &[3, 1]) }.unwrap();
        let x = SubsetHandle::from_mask(&g, mask & ((1 << g.len()) - 1));
        let local = is_ideal_local(&x).unwrap().holds;
        if is_ideal_global(&x).unwrap() {
            prop_assert!(local);
        }
        if local {
            let b_i: BTreeSet<_> = extremal_reps(&x).unwrap().iter().flat_map(|w| closure_by_definition(&g, w.word())).collect();
            prop_assert!(b_i.is_subset(x.members()));
        }
    }
}

#[test]
fn ideal_tests_agree_on_sl3_adjoint() {
    let g = build_tableau_crystal(3, &[2, 1]).unwrap();
    for mask in 0..1u64 << g.len() {
        let x = SubsetHandle::from_mask(&g, mask);
        assert_eq!(
            is_ideal_local(&x).unwrap().holds,
            is_ideal_global(&x).unwrap(),
            "{:?}",
            x.sorted_ids()
        );
    }
}

/// `B_{s2}(2 omega2) ∪ {f1 f2 b}` passes (E), (I) and (P) without being a
/// Demazure crystal: the extra element is not extremal, so the local
/// conditions never see it.
#[test]
fn local_conditions_admit_a_non_demazure_subset() {
    let g = build_tableau_crystal(3, &[2, 2]).unwrap();
    let x = select(&g, "demazure [2]; f1 f2 @hw").unwrap();
    assert_eq!(x.len(), 4);
    assert!(is_extremal(&x).holds);
    assert!(is_ideal_local(&x).unwrap().holds);
    assert!(is_principal(&x).unwrap().holds);
    assert!(!is_ideal_global(&x).unwrap());
    let verdict = is_demazure(&x).unwrap();
    assert!(!verdict.holds);
    match verdict.witness {
        Some(Witness::NotDemazure { w, extra, missing }) => {
            assert_eq!(g.weyl().labels(&w), vec![2]);
            assert_eq!(
                extra.iter().map(|&b| g.id(b)).collect::<Vec<_>>(),
                vec!["[[1,2],[2,3]]"]
            );
            assert!(missing.is_empty());
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

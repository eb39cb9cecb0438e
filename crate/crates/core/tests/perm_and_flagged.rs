use std::collections::BTreeSet;

use itertools::Itertools;
use permcode::perm::{coarser_class_by_shuffle, shifted_shuffle_of_identities};
use permcode::poly::Monomial;
use permcode::{
    coarser_class, compositions_of, descent_class, h_product, ribbon_determinant, ribbon_flagged,
    shuffle, Composition, Permutation, Polynomial, SubDiagonalCode, Word,
};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn descent_sets_and_compositions() {
    for n in 0..=8 {
        let mut seen = BTreeSet::new();
        for p in Permutation::all(n) {
            let comp = p.descent_composition();
            assert_eq!(comp.descent_set(), p.descent_set());
            seen.insert(comp);
        }
        assert_eq!(seen.len(), if n == 0 { 1 } else { 1 << (n - 1) });
    }
}

#[test]
fn coarser_class_two_routes() {
    for n in 1..=7 {
        for comp in compositions_of(n) {
            assert_eq!(
                coarser_class(&comp),
                coarser_class_by_shuffle(&comp),
                "{comp}"
            );
        }
    }
}

#[test]
fn fs_corollary_per_class() {
    for n in 1..=7 {
        for comp in compositions_of(n) {
            let mut imaj: Vec<usize> = descent_class(&comp)
                .iter()
                .map(|p| p.inverse().maj())
                .collect();
            let mut inv: Vec<usize> = descent_class(&comp).iter().map(Permutation::inv).collect();
            imaj.sort_unstable();
            inv.sort_unstable();
            assert_eq!(imaj, inv, "{comp}");
        }
    }
}

#[test]
fn defining_relation_and_routes() {
    for n in 1..=6 {
        let mut mass = 0;
        for comp in compositions_of(n) {
            let ribbon = ribbon_flagged(&comp);
            assert_eq!(ribbon, ribbon_determinant(&comp), "{comp}");
            assert!(ribbon.all_coefficients_nonnegative());
            mass += ribbon.mass();
            let coarser: Polynomial = comp.coarsenings().iter().map(ribbon_flagged).sum();
            assert_eq!(h_product(&comp), coarser, "{comp}");
        }
        assert_eq!(mass, (1..=n as i64).product::<i64>());
    }
}

#[test]
fn ribbon_monomials_are_sorted_codes() {
    for n in 1..=6 {
        let sorted: BTreeSet<Monomial> = SubDiagonalCode::all(n)
            .map(|c| Monomial::from_indices(c.sorted()))
            .collect();
        for comp in compositions_of(n) {
            for (m, _) in ribbon_flagged(&comp).terms() {
                assert!(sorted.contains(m), "{comp}: {}", m.bracket());
            }
        }
    }
}

#[test]
fn shifted_shuffles_of_identities_are_distinct() {
    let comp: Composition = "(2,1,1,2)".parse().unwrap();
    let words = shifted_shuffle_of_identities(comp.parts());
    assert_eq!(words.len(), 180);
    assert!(words.iter().tuple_windows().all(|(a, b)| a < b));
}

fn word(max_len: usize, max_letter: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_letter, 0..=max_len).prop_map(Word)
}

proptest! {
    #[test]
    fn shuffle_cardinality(u in word(5, 4), v in word(5, 4)) {
        let out = shuffle(&u, &v);
        prop_assert_eq!(out.len(), binomial(u.len() + v.len(), u.len()));
        prop_assert!(out.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn disjoint_shuffles_are_distinct(a in 0usize..5, b in 0usize..5) {
        let u = Permutation::identity(a);
        let v = Permutation::identity(b).shifted(a);
        let out = shuffle(&Word(u.as_slice().to_vec()), &v);
        let distinct: BTreeSet<&Word> = out.iter().collect();
        prop_assert_eq!(distinct.len(), out.len());
    }
}

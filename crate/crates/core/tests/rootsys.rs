use proptest::prelude::*;
use repcoh::rootsys::{poincare_product, CartanType, RootDatum};

/// Π_i (1 + q + ... + q^{d_i - 1}) from the degrees alone.
fn product_from_degrees(t: CartanType) -> Vec<u64> {
    let mut out = vec![1u64];
    for d in t.degrees() {
        let mut next = vec![0u64; out.len() + d - 1];
        for (i, c) in out.iter().enumerate() {
            for j in 0..d {
                next[i + j] += c;
            }
        }
        out = next;
    }
    out
}

#[test]
fn poincare_polynomials_by_length() {
    for g in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6"] {
        let d = RootDatum::from_label(g).unwrap();
        let expected = product_from_degrees(d.cartan_type);
        assert_eq!(d.poincare_polynomial(), expected, "{g}");
        assert_eq!(poincare_product(d.cartan_type), expected, "{g}");
    }
}

#[test]
fn e7_cominuscule_cosets() {
    let d = RootDatum::from_label("E7").unwrap();
    let reps = d.minimal_coset_reps(&[7], 27).unwrap().reps;
    assert_eq!(reps.len(), 56);
    assert_eq!(reps.iter().map(|w| w.length).max(), Some(27));
}

#[test]
fn coset_counts_are_index_of_levi() {
    for (g, r) in [("F4", 1), ("F4", 4), ("G2", 2), ("D5", 3), ("E6", 2)] {
        let d = RootDatum::from_label(g).unwrap();
        let levi: Vec<usize> = (1..=d.rank()).filter(|&j| j != r).collect();
        let n = d.minimal_coset_reps(&[r], d.longest_length()).unwrap().reps.len() as u128;
        assert_eq!(n * d.levi_weyl_order(&levi), d.weyl_order(), "{g} r={r}");
    }
}

#[test]
fn bad_labels_rejected() {
    for s in ["A0", "B1", "E9", "G3", "H3", "x"] {
        assert!(RootDatum::from_label(s).is_err(), "{s}");
    }
}

proptest! {
    #[test]
    fn canonical_words_are_reduced(word in prop::collection::vec(1usize..=4, 0..12)) {
        let d = RootDatum::from_label("F4").unwrap();
        let w = d.element_from_word(&word).unwrap();
        prop_assert!(w.length <= word.len());
        prop_assert_eq!(w.length, w.word.len());
        prop_assert_eq!(d.inversion_count(&w), w.length);
        let again = d.element_from_word(&w.word).unwrap();
        prop_assert_eq!(again.word, w.word);
    }

    #[test]
    fn reflections_preserve_the_root_system(word in prop::collection::vec(1usize..=3, 0..8)) {
        let d = RootDatum::from_label("B3").unwrap();
        let w = d.element_from_word(&word).unwrap();
        for j in 0..3 {
            let img = w.apply(&d.simple_root_omega(j));
            prop_assert!(d.root_position(&img).is_some());
        }
    }
}

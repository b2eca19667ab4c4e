use std::sync::Arc;

use proptest::prelude::*;
use repcoh::polyalg::{q, Poly};
use repcoh::schubert::cache::ConstantCache;
use repcoh::schubert::oracle::{bgg_coefficient, coinvariant_oracle};
use repcoh::schubert::{engine_equivalence, Calculus, Engine, SchubertClass, Space, SupportMode};

#[test]
fn engines_agree_exhaustively_in_rank_two() {
    for g in ["A2", "B2", "G2"] {
        let rep = engine_equivalence(&Calculus::from_label(g).unwrap()).unwrap();
        assert!(rep.passed(), "{g}: {:?}", rep.failures);
        assert_eq!(rep.pairs, rep.elements * rep.elements);
    }
}

#[test]
fn coinvariant_table_is_a_ring() {
    for g in ["A2", "B2", "G2"] {
        let calc = Calculus::from_label(g).unwrap();
        let t = coinvariant_oracle(&calc).unwrap();
        t.check_commutative().unwrap();
        t.check_associative().unwrap();
        t.check_duality().unwrap();
    }
}

#[test]
fn cup_products_match_coinvariant_oracle() {
    let calc = Calculus::from_label("B2").unwrap();
    let t = coinvariant_oracle(&calc).unwrap();
    let elems: Vec<_> = (0..=calc.datum.longest_length()).flat_map(|l| calc.level(&Space::Borel, l).unwrap()).collect();
    for u in &elems {
        for v in &elems {
            let a = SchubertClass::basis(calc.group(), Space::Borel, &u.word);
            let b = SchubertClass::basis(calc.group(), Space::Borel, &v.word);
            let expected = t.product_class(&calc, t.index(&u.word).unwrap(), t.index(&v.word).unwrap());
            for e in [Engine::Duan, Engine::Chevalley] {
                assert_eq!(calc.cup_product(&a, &b, e).unwrap(), expected, "{:?} {:?} {e:?}", u.word, v.word);
            }
        }
    }
}

fn random_poly(rank: usize, deg: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=deg as u32, rank), -6i64..=6).prop_filter("degree", move |(e, _)| e.iter().sum::<u32>() as usize == deg),
        1..4,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn borel_image_matches_divided_differences(terms in random_poly(2, 3), g in prop::sample::select(vec!["B2", "G2", "A2"])) {
        let calc = Calculus::from_label(g).unwrap();
        let sp = calc.omega_space();
        let f = Poly::from_terms(&sp, terms.into_iter().map(|(e, c)| (e, q(c))));
        let img = calc.borel_image(&f, &Space::Borel, SupportMode::Full).unwrap();
        for w in calc.level(&Space::Borel, 3).unwrap() {
            prop_assert_eq!(img.coefficient(&w.word), bgg_coefficient(&calc.datum, &w.word, &f).unwrap());
        }
    }

    #[test]
    fn borel_image_matches_divided_differences_b3(terms in random_poly(3, 2)) {
        let calc = Calculus::from_label("B3").unwrap();
        let f = Poly::from_terms(&calc.omega_space(), terms.into_iter().map(|(e, c)| (e, q(c))));
        let img = calc.borel_image(&f, &Space::Borel, SupportMode::Full).unwrap();
        for w in calc.level(&Space::Borel, 2).unwrap() {
            prop_assert_eq!(img.coefficient(&w.word), bgg_coefficient(&calc.datum, &w.word, &f).unwrap());
        }
    }
}

fn scratch(name: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("repcoh-{name}-{}", std::process::id()));
    let _ = std::fs::remove_file(&p);
    p
}

#[test]
fn warm_cache_gives_cold_answers() {
    let path = scratch("cache");
    let cold = {
        let cache = Arc::new(ConstantCache::open(&path).unwrap());
        let calc = Calculus::from_label("G2").unwrap().with_cache(cache.clone());
        let rep = engine_equivalence(&calc).unwrap();
        cache.flush().unwrap();
        assert!(!cache.is_empty());
        rep
    };
    let cache = Arc::new(ConstantCache::open(&path).unwrap());
    let stored = cache.len();
    assert!(stored > 0);
    let calc = Calculus::from_label("G2").unwrap().with_cache(cache.clone());
    let warm = engine_equivalence(&calc).unwrap();
    assert_eq!(cold.nonzero, warm.nonzero);
    assert_eq!(cache.len(), stored);
    assert!(calc.verify_cache_sample(1.0, 7).unwrap().is_empty());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn corrupted_cache_line_is_caught_by_sampling() {
    let path = scratch("bad-cache");
    {
        let cache = Arc::new(ConstantCache::open(&path).unwrap());
        let calc = Calculus::from_label("B2").unwrap().with_cache(cache.clone());
        engine_equivalence(&calc).unwrap();
        cache.flush().unwrap();
    }
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let i = lines.iter().position(|l| !l.starts_with('#') && !l.trim().is_empty()).unwrap();
    let (head, val) = lines[i].rsplit_once('|').unwrap();
    let v: i64 = val.trim().parse().unwrap();
    lines[i] = format!("{head}| {}", v + 1);
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let cache = Arc::new(ConstantCache::open(&path).unwrap());
    let calc = Calculus::from_label("B2").unwrap().with_cache(cache);
    assert_eq!(calc.verify_cache_sample(1.0, 1).unwrap().len(), 1);
    std::fs::remove_file(&path).unwrap();
}

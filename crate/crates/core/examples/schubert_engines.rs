//! Structure constants c^w_{u,v} by the Duan operator, cup products by both
//! engines, and the exhaustive engine comparison on a small group.
//!
//! cargo run --release --example schubert_engines -- B3

use std::time::Instant;

use repcoh::schubert::{engine_equivalence, Calculus, Engine, SchubertClass, Space};

fn main() -> repcoh::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let calc = Calculus::from_label(&group)?;
    let d = &calc.datum;
    let g = calc.group();

    // ε_{s_1} ∪ ε_w for a few w, both ways
    let s1 = SchubertClass::basis(g, Space::Borel, &[1]);
    for w in d.enumerate_weyl(2).into_iter().flatten().filter(|w| w.length == 2) {
        let b = SchubertClass::basis(g, Space::Borel, &w.word);
        let duan = calc.cup_product(&s1, &b, Engine::Duan)?;
        let chev = calc.cup_product(&s1, &b, Engine::Chevalley)?;
        println!("e[s1] * {} = {}{}", b, duan, if duan == chev { "" } else { "  (engines differ!)" });
    }

    let u = d.element_from_word(&[1, 2])?;
    let v = d.element_from_word(&[2, 1])?;
    for w in d.enumerate_weyl(4).into_iter().nth(4).unwrap_or_default() {
        let c = calc.structure_constant(&u, &v, &w)?;
        if c != 0.into() {
            println!("c^{}_{{s1s2, s2s1}} = {c}", w.word_string());
        }
    }

    let t = Instant::now();
    let rep = engine_equivalence(&calc)?;
    println!(
        "{}: {} ordered pairs, {} nonzero constants, {} disagreements ({:.2?})",
        rep.group,
        rep.pairs,
        rep.nonzero,
        rep.failures.len(),
        t.elapsed()
    );
    Ok(())
}

//! Weyl group enumeration: Poincaré polynomials against Π [d_i]_q and the
//! minimal coset representatives of a maximal parabolic.
//!
//! cargo run --release --example weyl_cosets -- E7 7

use repcoh::rootsys::{poincare_product, RootDatum};

fn main() -> repcoh::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "E7".into());
    let r: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(7);
    let d = RootDatum::from_label(&group)?;
    println!("{group}: degrees {:?}, |W| = {}", d.cartan_type.degrees(), d.weyl_order());
    let product = poincare_product(d.cartan_type);
    if d.weyl_order() <= 60_000 {
        let counted = d.poincare_polynomial();
        println!("by length:  {counted:?}\nproduct:    {product:?}\nequal: {}", counted == product);
    } else {
        println!("product: {product:?}");
    }
    let cosets = d.minimal_coset_reps(&[r], d.longest_length())?;
    let mut by_len = vec![0usize; d.longest_length() + 1];
    for w in &cosets.reps {
        by_len[w.length] += 1;
    }
    while by_len.last() == Some(&0) {
        by_len.pop();
    }
    println!("W^P{r}: {} elements, by length {by_len:?}", cosets.reps.len());
    if let Some(w) = cosets.reps.iter().max_by_key(|w| w.length) {
        println!("longest: {} (length {})", w.word_string(), w.length);
    }
    Ok(())
}

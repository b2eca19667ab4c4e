//! The tabulated generators of S(t*)^{W_L} for one maximal Levi: invariance,
//! relations, and the span of their products against the Hilbert series.
//!
//! cargo run --release --example levi_invariants -- E6 3

use repcoh::invariants::reynolds::span_report;
use repcoh::invariants::{case_generators, check_invariance};
use repcoh::rootsys::RootDatum;
use repcoh::schubert::Space;

fn main() -> repcoh::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "F4".into());
    let r: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let d = RootDatum::from_label(&group)?;
    let fam = case_generators(&group, r)?;
    for (name, y) in &fam.y_defs {
        println!("{name} = {}", y.to_text());
    }
    for g in &fam.generators {
        let inv = check_invariance(&d, r, &g.poly)?;
        println!("{} (degree {}): {}", g.name, g.degree, if inv.passed() { "invariant" } else { "NOT invariant" });
    }
    for (name, rel) in &fam.relations {
        println!("{name}: {}", if rel.is_zero() { "0".to_string() } else { rel.to_text() });
    }
    let levi = Space::maximal(r).levi(d.rank());
    for (m, rank, expected) in span_report(&d, &levi, &fam.graded(), 6) {
        println!("degree {m}: products span {rank} of {expected}");
    }
    Ok(())
}

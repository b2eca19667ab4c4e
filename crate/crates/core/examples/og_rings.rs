//! Presented cohomology rings of OG(n-k, 2n): Hilbert functions, a few
//! products, and the restriction from the stable ring.
//!
//! cargo run --release --example og_rings -- 5 2

use std::time::Instant;

use repcoh::ogring::{build_ring, restriction_map, schur_determinant, top_degree, OgKind};
use repcoh::polyalg::Q;

fn main() -> repcoh::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(2));

    let t = Instant::now();
    let fin = build_ring::<Q>(k, OgKind::Finite { n })?;
    println!("OG({}, {}) built in {:.2?}", n - k, 2 * n, t.elapsed());
    let h = fin.hilbert();
    println!("hilbert: {h:?} (total {})", h.iter().sum::<usize>());

    let tk = fin.tau(k)?;
    let tkp = fin.tau_prime()?;
    println!("t{k} * t{k}' = {}", tk.mul(&tkp)?.to_text());
    println!("t1^{} = {}", top_degree(k, n), {
        let t1 = fin.tau(1)?;
        let mut acc = fin.one();
        for _ in 0..top_degree(k, n) {
            acc = acc.mul(&t1)?;
        }
        acc.to_text()
    });
    for s in n - k + 1..n {
        println!("Delta_{s} = {}", schur_determinant(s, &fin)?.to_text());
    }

    let t = Instant::now();
    let st = build_ring::<Q>(k, OgKind::Stable { trunc: 4 * k + 4 })?;
    println!("stable ring to degree {} built in {:.2?}: {:?}", 4 * k + 4, t.elapsed(), st.hilbert());
    let x = st.tau(k + 1)?.mul(&st.tau(k + 1)?)?;
    println!("stable t{0}^2 = {1}", k + 1, x.to_text());
    println!("restricted: {}", restriction_map(&st, &fin, &x)?.to_text());
    Ok(())
}

//! The type D identity ξ(e_i(t̄²)) = c_i² + 2 Σ (-1)^j c_{i+j} c_{i-j} on
//! OG(n-k, 2n), both sides computed in the Schubert basis.
//!
//! cargo run --release --example dn_identity -- 5 2

use repcoh::invariants::dn::dn_levi_generators;
use repcoh::schubert::Calculus;
use repcoh::ximap::dn::{chern_quotient_d, verify_theorem_xi_d};

fn main() -> repcoh::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(2));
    let calc = Calculus::from_label(&format!("D{n}"))?;
    let gens = dn_levi_generators(n, k)?;
    for (name, p) in &gens.squares {
        println!("{name} = {}", p.to_text());
    }
    let chern = chern_quotient_d(&calc, k)?;
    for (p, c) in chern.iter().enumerate().take(n + k + 1) {
        println!("c_{p} = {c}");
    }
    for i in 1..=k {
        let check = verify_theorem_xi_d(&calc, k, i, &chern)?;
        println!("i = {i}: {} ({})", if check.passed() { "holds" } else { "FAILS" }, check.lhs);
    }
    Ok(())
}

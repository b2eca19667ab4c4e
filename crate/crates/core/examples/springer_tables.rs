//! θ_λ on the maximal torus for any group and dominant weight, and the
//! comparison with a stored table where there is one.
//!
//! cargo run --release --example springer_tables -- F4 0,0,0,1

use repcoh::rootsys::RootDatum;
use repcoh::springer::{differential_at_identity, theta_torus, weight_system, BasisConfig};
use repcoh::ximap::corpus::{compare_theta, GROUPS};

fn main() -> repcoh::Result<()> {
    let group = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let d = RootDatum::from_label(&group)?;
    let weight: Vec<i64> = match std::env::args().nth(2) {
        Some(s) => s.split(',').filter_map(|x| x.trim().parse().ok()).collect(),
        None => {
            let mut w = vec![0; d.rank()];
            w[0] = 1;
            w
        }
    };
    let ws = weight_system(&d, &weight)?;
    println!("{group}, lambda = {weight:?}: dim V = {}, {} distinct weights", ws.dimension(), ws.entries.len());
    let basis = BasisConfig::omega(d.rank());
    let map = theta_torus(&ws, &basis)?;
    print!("{}", map.to_text());
    let diff = differential_at_identity(&map.coordinates, &basis);
    println!("differential at 1: {:?}", diff.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());

    if GROUPS.contains(&group.as_str()) {
        let c = compare_theta(&group)?;
        println!(
            "stored table (tabulated weight and coordinates): {} of {} terms agree{}",
            if c.passed() { "all" } else { "not all" },
            c.terms,
            c.table_scale.map(|s| format!(", table differential {s} x id")).unwrap_or_default()
        );
    }
    Ok(())
}

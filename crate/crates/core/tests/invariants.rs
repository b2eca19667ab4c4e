use repcoh::invariants::reynolds::{hilbert_dimensions, reynolds_dimension, span_report, REYNOLDS_MAX_ORDER};
use repcoh::invariants::{case_generators, check_invariance, e6_psi, Invariance};
use repcoh::rootsys::RootDatum;

/// Returns the declared relations that do not vanish.
fn sweep(group: &str, ranks: std::ops::RangeInclusive<usize>) -> Vec<(usize, String, String)> {
    let mut bad = Vec::new();
    let d = RootDatum::from_label(group).unwrap();
    for r in ranks {
        let f = case_generators(group, r).unwrap();
        for g in &f.generators {
            match check_invariance(&d, r, &g.poly).unwrap() {
                Invariance::Pass => {}
                Invariance::Fail { j, .. } => panic!("{group} r={r} {} moved by s{j}", g.name),
            }
        }
        for (name, rel) in &f.relations {
            if !rel.is_zero() {
                bad.push((r, name.clone(), rel.to_text()));
            }
        }
    }
    bad
}

#[test]
fn e6_families_invariant() {
    assert!(sweep("E6", 1..=6).is_empty());
}

#[test]
fn e7_families_invariant() {
    // the printed R_{7,4} is off by a factor 2 on y1 + y2 + y3
    assert_eq!(sweep("E7", 1..=7), vec![(4, "R_{7,4}".to_string(), "-w4".to_string())]);
}

#[test]
fn generator_counts_and_degrees() {
    let f = case_generators("E7", 7).unwrap();
    let degs: Vec<usize> = f.generators.iter().map(|g| g.degree).collect();
    assert_eq!(degs, vec![2, 5, 6, 8, 9, 12, 1]);
    let f = case_generators("F4", 1).unwrap();
    let degs: Vec<usize> = f.generators.iter().map(|g| g.degree).collect();
    assert_eq!(degs, vec![2, 4, 6, 1]);
    let f = case_generators("E6", 1).unwrap();
    assert_eq!(f.generators.len(), 7);
    assert_eq!(f.generators[6].degree, 5);
}

#[test]
fn psi5_odd_under_x_sign() {
    // a_i <-> b_i leaves the sum of a^5 + b^5 alone; the total is homogeneous
    let p = e6_psi(5).unwrap();
    assert_eq!(p.homogeneous_degree(), Some(5));
}

#[test]
fn families_span_low_degrees() {
    // the generator products reach the full invariant dimension up to degree 6
    for (group, rs) in [("G2", 1..=2), ("F4", 1..=4), ("E6", 1..=6), ("E7", 1..=7)] {
        let d = RootDatum::from_label(group).unwrap();
        for r in rs {
            let levi: Vec<usize> = (1..=d.rank()).filter(|&j| j != r).collect();
            let f = case_generators(group, r).unwrap();
            for (m, rank, h) in span_report(&d, &levi, &f.graded(), 6) {
                assert_eq!(rank as u64, h, "{group} r={r} degree {m}");
            }
        }
    }
}

#[test]
fn hilbert_agrees_with_averaging_where_small() {
    for (group, r) in [("G2", 1), ("F4", 1), ("F4", 2), ("F4", 3), ("E6", 2), ("E6", 3)] {
        let d = RootDatum::from_label(group).unwrap();
        let levi: Vec<usize> = (1..=d.rank()).filter(|&j| j != r).collect();
        if d.levi_weyl_order(&levi) > REYNOLDS_MAX_ORDER {
            continue;
        }
        let h = hilbert_dimensions(&d, &levi, 3);
        for m in 1..=3 {
            assert_eq!(reynolds_dimension(&d, &levi, m).unwrap() as u64, h[m], "{group} r={r} m={m}");
        }
    }
}

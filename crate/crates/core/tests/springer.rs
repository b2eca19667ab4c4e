use repcoh::polyalg::{q, Q};
use repcoh::rootsys::RootDatum;
use repcoh::springer::{differential_at_identity, theta_torus, weight_system, BasisConfig};

#[test]
fn weight_dimensions_match_weyl_formula() {
    for (g, l) in [("G2", vec![1, 0]), ("F4", vec![0, 0, 0, 1]), ("E6", vec![1, 0, 0, 0, 0, 0]), ("B3", vec![1, 1, 0]), ("D5", vec![0, 1, 0, 0, 1])] {
        let d = RootDatum::from_label(g).unwrap();
        let ws = weight_system(&d, &l).unwrap();
        assert_eq!(Q::from_integer((ws.dimension() as i64).into()), d.weyl_dimension(&l), "{g}");
    }
}

#[test]
fn e7_minuscule() {
    let d = RootDatum::from_label("E7").unwrap();
    let ws = weight_system(&d, &[0, 0, 0, 0, 0, 0, 1]).unwrap();
    assert_eq!(ws.dimension(), 56);
    assert!(ws.entries.iter().all(|(_, m)| *m == 1));
}

#[test]
fn differential_at_identity_is_identity() {
    for (g, l) in [("G2", vec![1, 0]), ("F4", vec![0, 0, 0, 1]), ("E6", vec![1, 0, 0, 0, 0, 0]), ("C3", vec![0, 1, 0]), ("A3", vec![1, 0, 1])] {
        let d = RootDatum::from_label(g).unwrap();
        let ws = weight_system(&d, &l).unwrap();
        let b = BasisConfig::omega(d.rank());
        let m = differential_at_identity(&theta_torus(&ws, &b).unwrap().coordinates, &b);
        for (i, row) in m.iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                assert_eq!(*x, q((i == k) as i64), "{g} ({i},{k})");
            }
        }
    }
}

#[test]
fn theta_is_weyl_equivariant() {
    // θ(s_j t) = s_j θ(t): evaluate both sides at a rational point of the torus
    let d = RootDatum::from_label("G2").unwrap();
    let ws = weight_system(&d, &[1, 0]).unwrap();
    let b = BasisConfig::omega(2);
    let th = theta_torus(&ws, &b).unwrap();
    let t = [q(2), q(3)];
    let eval = |pt: &[Q]| -> Vec<Q> { th.coordinates.iter().map(|p| p.eval(pt)).collect() };
    let base = eval(&t);
    for j in 1..=2 {
        // t_i = t(ω_i); s_j acts on characters by ω_i -> ω_i - δ_ij α_j
        let a = d.simple_root_omega(j - 1);
        let st: Vec<Q> = (0..2)
            .map(|i| {
                if i + 1 != j {
                    return t[i].clone();
                }
                let mut v = t[i].clone();
                for (k, &c) in a.iter().enumerate() {
                    for _ in 0..c.abs() {
                        if c > 0 { v /= &t[k]; } else { v *= &t[k]; }
                    }
                }
                v
            })
            .collect();
        let lhs = eval(&st);
        // s_j on α^∨-coordinates: h -> h - α_j(h) α_j^∨
        let cart = &d.cartan;
        let aj: Q = (0..2).map(|i| base[i].clone() * q(cart[i][j - 1])).sum();
        let mut rhs = base.clone();
        rhs[j - 1] -= aj;
        assert_eq!(lhs, rhs, "s{j}");
    }
}

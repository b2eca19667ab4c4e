use repcoh::invariants::case_generators;
use repcoh::invariants::dn::{dn_levi_generators, tbar_to_omega};
use repcoh::polyalg::Poly;
use repcoh::schubert::{Calculus, Space, SupportMode};
use repcoh::ximap::{chern_quotient_d, duan_borel_image, functoriality_check, homomorphism_check, report_section, verify_theorem_xi_d, xi_image, ReportOptions, RowStatus};

#[test]
fn g2_rows_agree_across_engines() {
    let calc = Calculus::from_label("G2").unwrap();
    let rep = report_section(&calc, &ReportOptions::default()).unwrap();
    assert_eq!(rep.rows.len(), 4);
    assert_eq!(rep.count(RowStatus::Mismatch), 0);
    assert_eq!(rep.count(RowStatus::Match) + rep.count(RowStatus::MismatchPaper), 4);
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn g2_p1_square_sign() {
    // (Θ2 - 3/2 Θ1)² through both routes; the right Chevalley rule gives -3/4.
    let calc = Calculus::from_label("G2").unwrap();
    let fam = case_generators("G2", 1).unwrap();
    let g = fam.generators.iter().find(|g| g.degree == 2).unwrap();
    let a = xi_image(&calc, 1, &g.poly).unwrap();
    let b = duan_borel_image(&calc, &g.poly, &Space::maximal(1)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_text(), "-3/4 e[s2s1]");
}

fn functorial(group: &str) {
    let calc = Calculus::from_label(group).unwrap();
    let n = calc.datum.rank();
    let all: Vec<usize> = (1..=n).collect();
    for r in 1..=n {
        let Ok(fam) = case_generators(group, r) else { continue };
        let gens: Vec<(String, Poly)> = fam.generators.iter().filter(|g| g.degree <= 4).map(|g| (g.name.clone(), g.poly.clone())).collect();
        let bad = functoriality_check(&calc, &Space::Parabolic(all.clone()), &Space::maximal(r), &gens).unwrap();
        assert!(bad.is_empty(), "{group} r={r}: {bad:?}");
    }
}

#[test]
fn functoriality_g2() {
    functorial("G2");
}

#[test]
fn functoriality_f4() {
    functorial("F4");
}

#[test]
fn homomorphism_g2_f4() {
    for (g, ranks) in [("G2", vec![1, 2]), ("F4", vec![1, 4])] {
        let calc = Calculus::from_label(g).unwrap();
        let mut tried = 0;
        for r in ranks {
            let fam = case_generators(g, r).unwrap();
            let (n, bad) = homomorphism_check(&calc, &fam, 5, 20).unwrap();
            assert!(bad.is_empty(), "{g} r={r}: {bad:?}");
            tried += n;
        }
        assert!(tried >= 20, "{g}: {tried} pairs");
    }
}

#[test]
fn dn_identity_d4_and_d5() {
    for (n, k) in [(4, 2), (5, 2)] {
        let calc = Calculus::from_label(&format!("D{n}")).unwrap();
        let c = chern_quotient_d(&calc, k).unwrap();
        for i in 0..=k {
            let t = verify_theorem_xi_d(&calc, k, i, &c).unwrap();
            assert!(t.passed(), "D{n} k={k} i={i}: {} vs {}", t.lhs.to_text(), t.rhs.to_text());
        }
    }
}

#[test]
fn dn_generators_map_into_parabolic() {
    // e_i of the squares lands in W^P classes of degree 2i
    let calc = Calculus::from_label("D4").unwrap();
    let g = dn_levi_generators(4, 2).unwrap();
    for (i, (_, p)) in g.squares.iter().enumerate() {
        let f = tbar_to_omega(4, p).unwrap();
        let img = calc.borel_image(&f, &Space::maximal(2), SupportMode::Full).unwrap();
        assert_eq!(img.degree(), Some(4 * (i + 1)));
    }
}

#[test]
fn non_invariant_input_rejected() {
    let calc = Calculus::from_label("G2").unwrap();
    let f = Poly::parse("w2", &calc.omega_space()).unwrap();
    assert!(xi_image(&calc, 1, &f).is_err());
}

use proptest::prelude::*;
use repcoh::polyalg::{q, qr, LaurentPoly, Poly, VarSpace};

fn space() -> VarSpace {
    VarSpace::indexed("x", 3)
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..=5, 1i64..4), 0..5).prop_map(|terms| {
        let sp = space();
        let mut p = Poly::zero(&sp);
        for (e, n, d) in terms {
            p.add_term(e, qr(n, d));
        }
        p
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i64..=4), 0..4).prop_map(|terms| {
        let sp = space();
        let mut p = LaurentPoly::zero(&sp);
        for (e, n) in terms {
            p.add_term(e, q(n));
        }
        p
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly(), l in laurent()) {
        prop_assert_eq!(Poly::parse(&a.to_text(), &space()).unwrap(), a);
        prop_assert_eq!(LaurentPoly::parse(&l.to_text(), &space()).unwrap(), l);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in prop::collection::vec(-3i64..4, 3)) {
        let pt: Vec<_> = x.iter().map(|&v| q(v)).collect();
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }

    #[test]
    fn laurent_units(l in laurent()) {
        // t1 * t1^-1 = 1
        let sp = space();
        let t = LaurentPoly::monomial(&sp, vec![1, 0, 0], q(1));
        let ti = LaurentPoly::monomial(&sp, vec![-1, 0, 0], q(1));
        prop_assert_eq!(&(&l * &t) * &ti, l);
    }
}

#[test]
fn canonical_text() {
    let sp = VarSpace::indexed("t", 1);
    let p = LaurentPoly::parse("1/2*t1 - 1/2*t1^-1", &sp).unwrap();
    assert_eq!(p.to_text(), "1/2*t1 - 1/2*t1^-1");
    let sq = &p * &p;
    assert_eq!(sq.to_text(), "1/4*t1^2 - 1/2 + 1/4*t1^-2");
}

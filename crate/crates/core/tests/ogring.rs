use repcoh::linalg::F2;
use repcoh::ogring::*;
use repcoh::polyalg::{q, Q};
use repcoh::rootsys::RootDatum;

/// Minimal coset representatives of `W(D_n)/W(L_{n-k})` counted by length.
fn coset_counts(n: usize, k: usize) -> Vec<usize> {
    let d = RootDatum::from_label(&format!("D{n}")).unwrap();
    let reps = d.minimal_coset_reps(&[n - k], d.longest_length()).unwrap().reps;
    let top = reps.iter().map(|w| w.length).max().unwrap();
    let mut out = vec![0; top + 1];
    for w in reps {
        out[w.length] += 1;
    }
    out
}

#[test]
fn hilbert_functions_match_coset_lengths() {
    for (n, k) in [(4, 2), (5, 2), (5, 3)] {
        let r = build_ring::<Q>(k, OgKind::Finite { n }).unwrap();
        assert_eq!(r.hilbert(), coset_counts(n, k), "n={n} k={k}");
        assert!(r.relation_failures().unwrap().is_empty());
    }
}

#[test]
fn partition_counts_match_coset_lengths() {
    for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)] {
        assert_eq!(typed_counts(k, Some(n), top_degree(k, n)), coset_counts(n, k), "n={n} k={k}");
    }
}

#[test]
fn mod_two_rings_have_the_same_dimensions() {
    for (n, k) in [(4, 2), (5, 3)] {
        let a = build_ring::<Q>(k, OgKind::Finite { n }).unwrap();
        let b = build_ring::<F2>(k, OgKind::Finite { n }).unwrap();
        assert_eq!(a.hilbert(), b.hilbert());
    }
}

#[test]
fn tau_monomials_span_each_degree() {
    for (n, k) in [(4, 2), (5, 2), (5, 3)] {
        let r = build_ring::<Q>(k, OgKind::Finite { n }).unwrap();
        for m in 0..=top_degree(k, n) {
            let elems: Vec<_> = kstrict_enumerate(k, Some(n), m).iter().map(|l| r.tau_monomial(l).unwrap()).collect();
            assert_eq!(rank_in_degree(&elems, m), r.ring.dimension(m), "n={n} k={k} m={m}");
        }
    }
}

#[test]
fn quadratic_relation_rewrites() {
    // t2 t2' = t3 t1 - t4 in OG(2, 8)
    let r = build_ring::<Q>(2, OgKind::Finite { n: 4 }).unwrap();
    let lhs = r.tau(2).unwrap().mul(&r.tau_prime().unwrap()).unwrap();
    let rhs = r.tau(3).unwrap().mul(&r.tau(1).unwrap()).unwrap().sub(&r.tau(4).unwrap());
    assert_eq!(lhs, rhs);
    let one = r.one();
    let t3 = r.tau(3).unwrap();
    assert_eq!(one.mul(&t3).unwrap(), t3);
}

#[test]
fn multiplication_is_associative_and_commutative() {
    let r = build_ring::<Q>(2, OgKind::Finite { n: 5 }).unwrap();
    let g: Vec<_> = ["t1", "t2", "t2'", "t3", "t5"].iter().map(|s| r.ring.generator(s).unwrap()).collect();
    let a = g[0].add(&g[3]);
    let b = g[1].scale(&q(3)).sub(&g[2]);
    let c = g[4].add(&g[0].mul(&g[0]).unwrap());
    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
}

#[test]
fn top_degree_is_one_dimensional() {
    for (n, k) in [(4, 2), (5, 3)] {
        let r = build_ring::<Q>(k, OgKind::Finite { n }).unwrap();
        let top = top_degree(k, n);
        assert_eq!(r.ring.dimension(top), 1);
        assert_eq!(r.ring.dimension(top + 1), 0);
    }
}

#[test]
fn stable_relations_and_chern_classes() {
    let s = build_ring::<Q>(2, OgKind::Stable { trunc: 10 }).unwrap();
    assert_eq!(s.hilbert(), typed_counts(2, None, 10));
    assert!(s.relation_failures().unwrap().is_empty());
    assert_eq!(s.c(2).unwrap(), s.tau(2).unwrap().add(&s.tau_prime().unwrap()));
    assert_eq!(s.c(3).unwrap(), s.tau(3).unwrap().scale(&q(2)));
    assert!(matches!(s.tau(2).unwrap().mul(&s.tau(9).unwrap()), Err(repcoh::Error::Truncation { .. })));
}

#[test]
fn restriction_is_a_surjective_homomorphism() {
    for (n, k) in [(4, 2), (5, 2), (5, 3)] {
        let fin = build_ring::<Q>(k, OgKind::Finite { n }).unwrap();
        let st = build_ring::<Q>(k, OgKind::Stable { trunc: 4 * k + 4 }).unwrap();
        let phi = |e: &RingElement<Q>| restriction_map(&st, &fin, e).unwrap();
        assert_eq!(phi(&st.one()), fin.one());
        // stable relations land in the finite ideal
        for (name, rel) in &st.ring.relations {
            let img = restriction_map(&st, &fin, &st.ring.element(rel).unwrap()).unwrap();
            assert!(img.is_zero(), "{name}");
            let direct = fin.ring.element(&rel.substitute(&identity_images(&st, &fin))).unwrap();
            assert!(direct.is_zero(), "{name} direct");
        }
        // c_p goes to c_p
        for p in 1..=(n + k).min(4 * k + 4) {
            assert_eq!(phi(&st.c(p).unwrap()), fin.c(p).unwrap(), "c{p}");
        }
        // surjective in every degree the truncation reaches
        for m in 0..=top_degree(k, n).min(4 * k + 4) {
            let imgs: Vec<_> = st.ring.basis(m).into_iter().map(|e| phi(&st.ring.element(&FreePoly::monomial(e, q(1))).unwrap())).collect();
            assert_eq!(rank_in_degree(&imgs, m), fin.ring.dimension(m), "n={n} k={k} m={m}");
        }
        // products commute with restriction
        let gens: Vec<_> = (1..=5).map(|p| st.tau(p).unwrap()).chain([st.tau_prime().unwrap()]).collect();
        for a in &gens {
            for b in &gens {
                let ab = a.mul(b).unwrap();
                assert_eq!(phi(&ab), phi(a).mul(&phi(b)).unwrap());
            }
        }
    }
}

fn identity_images(st: &OgRing<Q>, fin: &OgRing<Q>) -> Vec<FreePoly<Q>> {
    let n = fin.ring.ngens();
    let mut out = Vec::new();
    for p in 1..=st.last {
        let name = format!("t{p}");
        out.push(fin.ring.gen_index(&name).map(|i| FreePoly::var(n, i)).unwrap_or_else(|_| FreePoly::zero(n)));
        if p == st.k {
            out.push(FreePoly::var(n, fin.ring.gen_index(&format!("t{p}'")).unwrap()));
        }
    }
    out
}

#[test]
fn restriction_basis_rule() {
    let fin = build_ring::<Q>(2, OgKind::Finite { n: 4 }).unwrap();
    let st = build_ring::<Q>(2, OgKind::Stable { trunc: 12 }).unwrap();
    let inside = KStrictPartition::new(vec![4, 2], 2, 2).unwrap();
    assert_eq!(restriction_map(&st, &fin, &st.tau_monomial(&inside).unwrap()).unwrap(), fin.tau_monomial(&inside).unwrap());
    let outside = KStrictPartition::new(vec![6], 2, 0).unwrap();
    assert!(restriction_map(&st, &fin, &st.tau_monomial(&outside).unwrap()).unwrap().is_zero());
}

#[test]
fn schur_determinants_match_dense_determinants() {
    // Δ_s evaluated through the ring agrees with det(c_{1+j-i}) at random values
    let st = build_ring::<Q>(3, OgKind::Stable { trunc: 8 }).unwrap();
    let vals: Vec<Q> = [3, -1, 2, 5, -4, 1, 2, 7, -3].iter().map(|&v| q(v)).collect();
    let eval = |e: &RingElement<Q>| -> Q {
        let p = e.to_free();
        let mut acc = q(0);
        for (mono, c) in p.terms() {
            let mut t = c.clone();
            for (i, &x) in mono.iter().enumerate() {
                for _ in 0..x {
                    t *= &vals[i];
                }
            }
            acc += t;
        }
        acc
    };
    // evaluate at the level of free polynomials: no relation has degree below 6
    for s in 1..=5 {
        let delta = schur_determinant(s, &st).unwrap();
        let cs: Vec<Q> = (0..=s).map(|p| eval(&st.c(p).unwrap())).collect();
        let m: Vec<Vec<Q>> = (0..s)
            .map(|i| (0..s).map(|j| if j + 1 >= i { cs.get(1 + j - i).cloned().unwrap_or_else(|| q(0)) } else { q(0) }).collect())
            .collect();
        assert_eq!(eval(&delta), repcoh::linalg::determinant(&m), "s={s}");
    }
}

#[test]
fn xi_images_in_the_stable_ring() {
    let e1 = xi_generator_image_stable::<Q>(2, 1).unwrap();
    let st = e1.ring().clone();
    let c = |p: usize| chern(&st, p);
    let want = c(1).mul(&c(1)).unwrap().sub(&c(2).scale(&q(2)));
    assert_eq!(e1, want);
    let e2 = xi_generator_image_stable::<F2>(2, 2).unwrap();
    let r2 = e2.ring().clone();
    let c2 = chern(&r2, 2);
    assert_eq!(e2, c2.mul(&c2).unwrap());
}

fn chern<F: repcoh::linalg::Field>(ring: &std::sync::Arc<PresentedRing<F>>, p: usize) -> RingElement<F> {
    let k = 2;
    let n = ring.ngens();
    let v = |name: &str| FreePoly::<F>::var(n, ring.gen_index(name).unwrap());
    let poly = match p {
        p if p < k => v(&format!("t{p}")),
        p if p == k => v("t2").add(&v("t2'")),
        p => v(&format!("t{p}")).scale(&F::from_i64(2)),
    };
    ring.element(&poly).unwrap()
}

#[test]
fn mod_two_injectivity() {
    for (k, d) in [(2, 8), (3, 12)] {
        let rep = mod2_injectivity_check(k, d).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.degrees.len(), d / 2 + 1);
    }
}

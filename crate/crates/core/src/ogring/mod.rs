//! Presented cohomology rings of the even orthogonal Grassmannians
//! `OG(n-k, 2n)` and of their stable limit, in the special classes
//! `t1, .., tk, tk', t(k+1), ..` (internal degree of `tp` is `p`).
//!
//! With `c_p = t_p (p < k)`, `t_k + t_k' (p = k)`, `2 t_p (p > k)` and
//! `Δ_s = det(c_{1+j-i})`, the finite ring has the relations
//! - `Δ_s = 0` for `n-k < s < n`;
//! - `t_k Δ_{n-k} = t_k' Δ_{n-k} = Σ_{p=k+1}^{n} (-1)^{p+k+1} t_p Δ_{n-p}`;
//! - `Σ_{p=k+1}^{s} (-1)^p t_p Δ_{s-p} = 0` for `n < s < n+k`;
//! - `t_s² + Σ_{p=1}^{s} (-1)^p t_{s+p} c_{s-p} = 0` for `k < s < n`;
//! - `t_k t_k' + Σ_{p=1}^{k} (-1)^p t_{k+p} t_{k-p} = 0`;
//!
//! with `t_0 = 1` and `t_p = 0` for `p ≥ n+k`. The stable ring keeps only
//! the quadratic relations, for every `s > k`.

mod mod2;
mod partitions;
mod ring;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Field;

pub use mod2::{bar_ring, mod2_injectivity_check, parity_check, Mod2Degree, Mod2Report};
pub use partitions::{
    epsilon, index_set, kstrict_enumerate, special_classes, top_degree, typed_counts, KStrictPartition, SpecialClass,
};
pub use ring::{monomials_of_weight, rank_in_degree, FreePoly, Grading, Mono, PresentedRing, RingElement};

/// Coefficient field chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    Rational,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OgKind {
    Finite { n: usize },
    Stable { trunc: usize },
}

pub fn default_trunc(k: usize) -> usize {
    4 * k + 4
}

/// The generators `t1..tk, tk', t(k+1)..t(last)` and their degrees.
fn tau_generators(k: usize, last: usize) -> (Vec<String>, Vec<usize>) {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for p in 1..=last {
        names.push(format!("t{p}"));
        weights.push(p);
        if p == k {
            names.push(format!("t{k}'"));
            weights.push(k);
        }
    }
    (names, weights)
}

/// Position of `t_p` among the generators.
fn tau_index(k: usize, p: usize) -> usize {
    if p <= k {
        p - 1
    } else {
        p
    }
}

#[derive(Clone, Debug)]
pub struct OgRing<F> {
    pub k: usize,
    pub kind: OgKind,
    /// Largest `p` with `t_p` a generator.
    pub last: usize,
    pub ring: Arc<PresentedRing<F>>,
}

/// Builders for the polynomials in the presentation.
struct Tau<F> {
    k: usize,
    last: usize,
    nvars: usize,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Tau<F> {
    fn new(k: usize, last: usize) -> Self {
        Tau { k, last, nvars: last + 1, _f: std::marker::PhantomData }
    }

    /// `t_p`, with `t_0 = 1` and `t_p = 0` past the last generator.
    fn t(&self, p: usize) -> FreePoly<F> {
        match p {
            0 => FreePoly::one(self.nvars),
            p if p > self.last => FreePoly::zero(self.nvars),
            p => FreePoly::var(self.nvars, tau_index(self.k, p)),
        }
    }

    fn t_prime(&self) -> FreePoly<F> {
        FreePoly::var(self.nvars, self.k)
    }

    fn c(&self, p: usize) -> FreePoly<F> {
        use std::cmp::Ordering::*;
        match (p.cmp(&self.k), p) {
            (_, 0) => FreePoly::one(self.nvars),
            (Less, _) => self.t(p),
            (Equal, _) => self.t(p).add(&self.t_prime()),
            (Greater, _) => self.t(p).scale(&F::from_i64(2)),
        }
    }

    /// `Δ_0..Δ_top` by expansion along the first column.
    fn deltas(&self, top: usize) -> Vec<FreePoly<F>> {
        schur_expansion(top, |p| self.c(p), self.nvars)
    }

    fn quadratic(&self, s: usize) -> FreePoly<F> {
        let mut r = self.t(s).mul(&self.t(s));
        for p in 1..=s {
            r = r.add(&self.t(s + p).mul(&self.c(s - p)).scale(&sign(p)));
        }
        r
    }

    fn quadratic_k(&self) -> FreePoly<F> {
        let k = self.k;
        let mut r = self.t(k).mul(&self.t_prime());
        for p in 1..=k {
            r = r.add(&self.t(k + p).mul(&self.t(k - p)).scale(&sign(p)));
        }
        r
    }
}

fn sign<F: Field>(p: usize) -> F {
    F::from_i64(if p % 2 == 0 { 1 } else { -1 })
}

/// `Δ_s = Σ_{j=1}^{s} (-1)^{j-1} c_j Δ_{s-j}`, `Δ_0 = 1`.
fn schur_expansion<F: Field>(top: usize, c: impl Fn(usize) -> FreePoly<F>, nvars: usize) -> Vec<FreePoly<F>> {
    let mut d = vec![FreePoly::one(nvars)];
    for s in 1..=top {
        let mut acc = FreePoly::zero(nvars);
        for j in 1..=s {
            acc = acc.add(&c(j).mul(&d[s - j]).scale(&sign(j + 1)));
        }
        d.push(acc);
    }
    d
}

fn finite_relations<F: Field>(k: usize, n: usize) -> Vec<(String, FreePoly<F>)> {
    let t = Tau::<F>::new(k, n + k - 1);
    let delta = t.deltas(n + k);
    let mut rels = Vec::new();
    for s in n - k + 1..n {
        rels.push((format!("Delta_{s}"), delta[s].clone()));
    }
    let mut rhs = FreePoly::zero(t.nvars);
    for p in k + 1..=n {
        rhs = rhs.add(&t.t(p).mul(&delta[n - p]).scale(&sign(p + k + 1)));
    }
    rels.push((format!("t{k}*Delta_{}", n - k), t.t(k).mul(&delta[n - k]).sub(&rhs)));
    rels.push((format!("t{k}'*Delta_{}", n - k), t.t_prime().mul(&delta[n - k]).sub(&rhs)));
    for s in n + 1..n + k {
        let mut r = FreePoly::zero(t.nvars);
        for p in k + 1..=s {
            r = r.add(&t.t(p).mul(&delta[s - p]).scale(&sign(p)));
        }
        rels.push((format!("Sum_{s}"), r));
    }
    for s in k + 1..n {
        rels.push((format!("Square_{s}"), t.quadratic(s)));
    }
    rels.push((format!("Square_{k}"), t.quadratic_k()));
    rels
}

fn stable_relations<F: Field>(k: usize, trunc: usize) -> Vec<(String, FreePoly<F>)> {
    let t = Tau::<F>::new(k, trunc);
    let mut rels = Vec::new();
    if 2 * k <= trunc {
        rels.push((format!("Square_{k}"), t.quadratic_k()));
    }
    for s in (k + 1..).take_while(|s| 2 * s <= trunc) {
        rels.push((format!("Square_{s}"), t.quadratic(s)));
    }
    rels
}

/// The finite ring for `OG(n-k, 2n)` or the stable ring truncated at
/// degree `trunc`. Graded dimensions are checked against the typed
/// k-strict partition counts.
pub fn build_ring<F: Field>(k: usize, kind: OgKind) -> Result<OgRing<F>> {
    if k < 2 {
        return Err(Error::Invalid(format!("need k >= 2, got {k}")));
    }
    match kind {
        OgKind::Finite { n } => {
            if n < k + 2 {
                return Err(Error::Invalid(format!("need n >= k + 2, got n={n}, k={k}")));
            }
            let last = n + k - 1;
            let (names, weights) = tau_generators(k, last);
            let top = top_degree(k, n);
            let expected = typed_counts(k, Some(n), top);
            let ring =
                PresentedRing::build(names, weights, finite_relations(k, n), Grading::Finite { top }, Some(&expected))?;
            Ok(OgRing { k, kind, last, ring })
        }
        OgKind::Stable { trunc } => {
            let (names, weights) = tau_generators(k, trunc);
            let expected = typed_counts(k, None, trunc);
            let ring = PresentedRing::build(
                names,
                weights,
                stable_relations(k, trunc),
                Grading::Truncated { trunc },
                Some(&expected),
            )?;
            Ok(OgRing { k, kind, last: trunc, ring })
        }
    }
}

impl<F: Field> OgRing<F> {
    fn tau_builder(&self) -> Tau<F> {
        Tau::new(self.k, self.last)
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.ring.hilbert()
    }

    pub fn one(&self) -> RingElement<F> {
        self.ring.one()
    }

    pub fn tau(&self, p: usize) -> Result<RingElement<F>> {
        self.ring.element(&self.tau_builder().t(p))
    }

    pub fn tau_prime(&self) -> Result<RingElement<F>> {
        self.ring.element(&self.tau_builder().t_prime())
    }

    pub fn c(&self, p: usize) -> Result<RingElement<F>> {
        self.ring.element(&self.tau_builder().c(p))
    }

    /// `τ^λ = Π t_{λ_i}`, with `t_k'` in place of `t_k` for type 2.
    pub fn tau_monomial(&self, lambda: &KStrictPartition) -> Result<RingElement<F>> {
        if lambda.k != self.k {
            return Err(Error::Invalid(format!("partition is {}-strict, ring has k={}", lambda.k, self.k)));
        }
        let t = self.tau_builder();
        let mut p = FreePoly::one(t.nvars);
        for &part in &lambda.parts {
            let f = if part == self.k && lambda.type_tag == 2 { t.t_prime() } else { t.t(part) };
            p = p.mul(&f);
        }
        self.ring.element(&p)
    }

    pub fn multiply(&self, a: &RingElement<F>, b: &RingElement<F>) -> Result<RingElement<F>> {
        self.ring.multiply(a, b)
    }

    /// The defining relations that do not reduce to zero (expected empty).
    pub fn relation_failures(&self) -> Result<Vec<String>> {
        self.ring.relation_failures()
    }
}

/// `Δ_s = det(c_{1+j-i})_{1 ≤ i,j ≤ s}` in the ring.
pub fn schur_determinant<F: Field>(s: usize, ring: &OgRing<F>) -> Result<RingElement<F>> {
    if s == 0 {
        return Err(Error::Invalid("Schur determinant needs s >= 1".into()));
    }
    let t = ring.tau_builder();
    ring.ring.element(&t.deltas(s)[s])
}

/// `c_i² + 2 Σ_{j=1}^{i} (-1)^j c_{i+j} c_{i-j}`, the image of
/// `e_i(h_1², .., h_k²)`.
pub fn xi_generator_image<F: Field>(ring: &OgRing<F>, i: usize) -> Result<RingElement<F>> {
    if i == 0 || i > ring.k {
        return Err(Error::Invalid(format!("need 1 <= i <= k, got i={i}")));
    }
    if let OgKind::Stable { trunc } = ring.kind {
        if 2 * i > trunc {
            return Err(Error::Truncation { degree: 2 * i, trunc });
        }
    }
    let t = ring.tau_builder();
    ring.ring.element(&xi_formula(|p| t.c(p), i))
}

fn xi_formula<F: Field>(c: impl Fn(usize) -> FreePoly<F>, i: usize) -> FreePoly<F> {
    let mut r = c(i).mul(&c(i));
    for j in 1..=i {
        r = r.add(&c(i + j).mul(&c(i - j)).scale(&F::from_i64(if j % 2 == 0 { 2 } else { -2 })));
    }
    r
}

/// The stable ring at the default truncation and the image of `e_i`.
pub fn xi_generator_image_stable<F: Field>(k: usize, i: usize) -> Result<RingElement<F>> {
    let ring = build_ring::<F>(k, OgKind::Stable { trunc: default_trunc(k).max(2 * i) })?;
    xi_generator_image(&ring, i)
}

/// `φ_{k,n}`: sends `t_p` to `t_p` (zero once `p ≥ n+k`) and `t_k'` to `t_k'`.
pub fn restriction_map<F: Field>(
    stable: &OgRing<F>,
    finite: &OgRing<F>,
    elem: &RingElement<F>,
) -> Result<RingElement<F>> {
    let OgKind::Stable { .. } = stable.kind else {
        return Err(Error::Invalid("restriction starts from the stable ring".into()));
    };
    let OgKind::Finite { .. } = finite.kind else {
        return Err(Error::Invalid("restriction lands in a finite ring".into()));
    };
    if stable.k != finite.k {
        return Err(Error::Invalid(format!("k differs: {} vs {}", stable.k, finite.k)));
    }
    if !Arc::ptr_eq(elem.ring(), &stable.ring) {
        return Err(Error::Invalid("element is not in the stable ring".into()));
    }
    let target = finite.tau_builder();
    let mut images = Vec::with_capacity(stable.ring.ngens());
    for p in 1..=stable.last {
        images.push(target.t(p));
        if p == stable.k {
            images.push(target.t_prime());
        }
    }
    finite.ring.element(&elem.to_free().substitute(&images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::F2;
    use crate::polyalg::Q;

    #[test]
    fn d4_k2_ring() {
        let r = build_ring::<Q>(2, OgKind::Finite { n: 4 }).unwrap();
        let h = r.hilbert();
        assert_eq!(h[0], 1);
        assert_eq!(h[1], 1);
        assert_eq!(h.iter().sum::<usize>(), 24);
        assert!(r.relation_failures().unwrap().is_empty());
        assert!(schur_determinant(3, &r).unwrap().is_zero());
    }

    #[test]
    fn schur_small() {
        let r = build_ring::<Q>(2, OgKind::Stable { trunc: 6 }).unwrap();
        let c1 = r.c(1).unwrap();
        assert_eq!(schur_determinant(1, &r).unwrap(), c1);
        let d2 = c1.mul(&c1).unwrap().sub(&r.c(2).unwrap());
        assert_eq!(schur_determinant(2, &r).unwrap(), d2);
    }

    #[test]
    fn xi_images() {
        let r = build_ring::<Q>(2, OgKind::Stable { trunc: 8 }).unwrap();
        let c1 = r.c(1).unwrap();
        let want = c1.mul(&c1).unwrap().sub(&r.c(2).unwrap().scale(&crate::polyalg::q(2)));
        assert_eq!(xi_generator_image(&r, 1).unwrap(), want);
        assert!(xi_generator_image(&r, 3).is_err());
        let small = build_ring::<Q>(2, OgKind::Stable { trunc: 3 }).unwrap();
        assert!(matches!(xi_generator_image(&small, 2), Err(Error::Truncation { .. })));
    }

    #[test]
    fn stable_mod2_dimensions() {
        let r = build_ring::<F2>(2, OgKind::Stable { trunc: 8 }).unwrap();
        assert_eq!(r.hilbert(), typed_counts(2, None, 8));
    }
}

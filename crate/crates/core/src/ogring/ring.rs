//! Graded rings given by weighted generators and homogeneous relations, with
//! normal forms computed degree by degree by exact linear algebra.
//!
//! In degree `m` the ideal is spanned by all products (monomial) x (relation)
//! of weight `m`. These rows are echelonized against a fixed column order;
//! the non-pivot monomials are the standard basis and reduction subtracts
//! pivot rows in increasing column order.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Field, Fp};

pub type Mono = Vec<u8>;

/// A polynomial in the generators of a ring, before reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct FreePoly<F> {
    terms: BTreeMap<Mono, F>,
    nvars: usize,
}

impl<F: Field> FreePoly<F> {
    pub fn zero(nvars: usize) -> Self {
        FreePoly { terms: BTreeMap::new(), nvars }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], F::one())
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::one(nvars).scale(&F::from_i64(c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(e: Mono, c: F) -> Self {
        let nvars = e.len();
        let mut p = FreePoly::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, e: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = FreePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = FreePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn to_fp(&self) -> Option<FreePoly<Fp>> {
        let mut out = FreePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.to_fp()?);
        }
        Some(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(FreePoly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Weighted degree if homogeneous (zero counts as degree 0).
    pub fn weight(&self, weights: &[usize]) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| mono_weight(e, weights));
        let first = it.next().unwrap_or(0);
        it.all(|w| w == first).then_some(first)
    }

    /// Renames variables: variable `i` goes to `images[i]`.
    pub fn substitute(&self, images: &[FreePoly<F>]) -> Self {
        let nv = images.first().map_or(0, |p| p.nvars);
        let mut out = FreePoly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = FreePoly::monomial(vec![0; nv], c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = t.mul(&images[i].pow(x as u32));
                }
            }
            out = out.add(&t);
        }
        out
    }

    pub fn to_text(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        // largest monomials first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { names[v].clone() } else { format!("{}^{x}", names[v]) })
                .collect();
            let coeff = c.to_text();
            let (neg, abs) = match coeff.strip_prefix('-') {
                Some(a) => (true, a.to_string()),
                None => (false, coeff),
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (abs.as_str(), mono.is_empty()) {
                (a, true) => s.push_str(a),
                ("1", false) => s.push_str(&mono.join("*")),
                (a, false) => s.push_str(&format!("{a}*{}", mono.join("*"))),
            }
        }
        s
    }
}

fn compute_piece<G: Field>(weights: &[usize], rels: &[(FreePoly<G>, usize)], m: usize) -> Piece<G> {
    let mut piece = Piece::new(weights, m);
    'outer: for (r, w) in rels {
        if r.is_zero() || *w > m {
            continue;
        }
        for mu in monomials_of_weight(weights, m - w) {
            if piece.pivots.len() == piece.monomials.len() {
                break 'outer;
            }
            let row = r.mul(&FreePoly::monomial(mu, G::one()));
            piece.insert(piece.vector(&row));
        }
    }
    piece.finish();
    piece
}

pub fn mono_weight(e: &[u8], weights: &[usize]) -> usize {
    e.iter().zip(weights).map(|(&x, &w)| x as usize * w).sum()
}

/// All exponent vectors of weighted degree `m`.
pub fn monomials_of_weight(weights: &[usize], m: usize) -> Vec<Mono> {
    fn go(weights: &[usize], i: usize, left: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        let mut e = 0usize;
        loop {
            cur[i] = e as u8;
            go(weights, i + 1, left - e * w, cur, out);
            if w == 0 || (e + 1) * w > left || e + 1 > u8::MAX as usize {
                break;
            }
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(weights, 0, m, &mut vec![0; weights.len()], &mut out);
    out
}

#[derive(Clone, Debug)]
struct Piece<F> {
    monomials: Vec<Mono>,
    index: HashMap<Mono, usize>,
    pivots: HashMap<usize, Vec<(usize, F)>>,
    basis: Vec<usize>,
    basis_pos: HashMap<usize, usize>,
}

impl<F: Field> Piece<F> {
    fn new(weights: &[usize], m: usize) -> Self {
        let mut monomials = monomials_of_weight(weights, m);
        // reversed exponent vectors ascending: balanced products become pivots
        // before products involving later generators
        monomials.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        let index = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Piece { monomials, index, pivots: HashMap::new(), basis: Vec::new(), basis_pos: HashMap::new() }
    }

    fn vector(&self, p: &FreePoly<F>) -> BTreeMap<usize, F> {
        p.terms().map(|(e, c)| (self.index[e], c.clone())).collect()
    }

    fn reduce(&self, mut v: BTreeMap<usize, F>) -> BTreeMap<usize, F> {
        let mut cursor = 0;
        while let Some((&c, x)) = v.range(cursor..).next() {
            if let Some(row) = self.pivots.get(&c) {
                let f = x.clone();
                for (j, y) in row {
                    let e = v.entry(*j).or_insert_with(F::zero);
                    *e = e.clone() - f.clone() * y.clone();
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            cursor = c + 1;
        }
        v
    }

    fn insert(&mut self, v: BTreeMap<usize, F>) {
        let v = self.reduce(v);
        let Some((&lead, x)) = v.iter().next() else { return };
        let inv = x.inv();
        let row = v.iter().map(|(&j, y)| (j, y.clone() * inv.clone())).collect();
        self.pivots.insert(lead, row);
    }

    fn finish(&mut self) {
        self.basis = (0..self.monomials.len()).filter(|c| !self.pivots.contains_key(c)).collect();
        self.basis_pos = self.basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    }

    fn dim(&self) -> usize {
        self.monomials.len() - self.pivots.len()
    }
}

/// Upper end of the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Every degree above `top` vanishes (certified when built).
    Finite { top: usize },
    /// Only degrees up to the truncation are represented.
    Truncated { trunc: usize },
}

#[derive(Clone, Debug)]
pub struct PresentedRing<F> {
    pub names: Vec<String>,
    pub weights: Vec<usize>,
    pub relations: Vec<(String, FreePoly<F>)>,
    pub grading: Grading,
    pieces: Vec<Piece<F>>,
}

impl<F: Field> PresentedRing<F> {
    /// Builds every graded piece up to `max_degree` in parallel. When
    /// `expected` is given, the graded dimensions must equal it.
    pub fn build(
        names: Vec<String>,
        weights: Vec<usize>,
        relations: Vec<(String, FreePoly<F>)>,
        grading: Grading,
        expected: Option<&[usize]>,
    ) -> Result<Arc<Self>> {
        let (last, window) = match grading {
            // past the top, one window of the largest generator weight
            Grading::Finite { top } => (top, weights.iter().copied().max().unwrap_or(1)),
            Grading::Truncated { trunc } => (trunc, 0),
        };
        let rels = relations
            .iter()
            .map(|(name, r)| {
                let w = r.weight(&weights).ok_or_else(|| Error::Invalid(format!("relation {name} is not homogeneous")))?;
                Ok((r.clone(), w))
            })
            .collect::<Result<Vec<_>>>()?;
        let pieces: Vec<Piece<F>> = (0..=last).into_par_iter().map(|m| compute_piece(&weights, &rels, m)).collect();
        for (m, p) in pieces.iter().enumerate() {
            let want = match expected {
                Some(e) => e.get(m).copied().unwrap_or(0),
                None => continue,
            };
            if p.dim() != want {
                return Err(Error::Hilbert { degree: m, ring: p.dim(), expected: want });
            }
        }
        // Above the top everything must vanish; checking one window suffices
        // since the generators live below it. Over ℚ the check runs modulo a
        // large prime: a zero quotient there forces a zero quotient over ℚ.
        if window > 0 {
            let fp_rels: Option<Vec<(FreePoly<Fp>, usize)>> =
                rels.iter().map(|(r, w)| Some((r.to_fp()?, *w))).collect();
            let dims: Vec<usize> = match fp_rels {
                Some(fr) => (last + 1..=last + window)
                    .into_par_iter()
                    .map(|m| compute_piece(&weights, &fr, m).dim())
                    .collect(),
                _ => (last + 1..=last + window)
                    .into_par_iter()
                    .map(|m| compute_piece(&weights, &rels, m).dim())
                    .collect(),
            };
            if let Some((i, &d)) = dims.iter().enumerate().find(|(_, &d)| d != 0) {
                return Err(Error::Hilbert { degree: last + 1 + i, ring: d, expected: 0 });
            }
        }
        Ok(Arc::new(PresentedRing { names, weights, relations, grading, pieces }))
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    /// Top degree (finite) or truncation degree.
    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    /// Graded dimensions up to the top (finite) or the truncation.
    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(Piece::dim).collect()
    }

    pub fn dimension(&self, m: usize) -> usize {
        self.pieces.get(m).map_or(0, Piece::dim)
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::Invalid(format!("no generator {name}")))
    }

    /// Standard monomials of degree `m`.
    pub fn basis(&self, m: usize) -> Vec<Mono> {
        match self.pieces.get(m) {
            Some(p) => p.basis.iter().map(|&c| p.monomials[c].clone()).collect(),
            None => Vec::new(),
        }
    }

    pub fn zero(self: &Arc<Self>) -> RingElement<F> {
        RingElement { ring: self.clone(), parts: BTreeMap::new() }
    }

    pub fn one(self: &Arc<Self>) -> RingElement<F> {
        self.element(&FreePoly::one(self.ngens())).expect("unit")
    }

    pub fn generator(self: &Arc<Self>, name: &str) -> Result<RingElement<F>> {
        self.element(&FreePoly::var(self.ngens(), self.gen_index(name)?))
    }

    /// Normal form of a free polynomial.
    pub fn element(self: &Arc<Self>, p: &FreePoly<F>) -> Result<RingElement<F>> {
        if p.nvars() != self.ngens() {
            return Err(Error::Invalid(format!("{} variables for {} generators", p.nvars(), self.ngens())));
        }
        let mut by_deg: BTreeMap<usize, FreePoly<F>> = BTreeMap::new();
        for (e, c) in p.terms() {
            by_deg
                .entry(mono_weight(e, &self.weights))
                .or_insert_with(|| FreePoly::zero(self.ngens()))
                .add_term(e.clone(), c.clone());
        }
        let mut parts = BTreeMap::new();
        for (m, q) in by_deg {
            let Some(piece) = self.pieces.get(m) else {
                match self.grading {
                    Grading::Finite { .. } => continue,
                    Grading::Truncated { trunc } => return Err(Error::Truncation { degree: m, trunc }),
                }
            };
            let v = piece.reduce(piece.vector(&q));
            if v.is_empty() {
                continue;
            }
            let mut coords = vec![F::zero(); piece.basis.len()];
            for (c, x) in v {
                coords[piece.basis_pos[&c]] = x;
            }
            parts.insert(m, coords);
        }
        Ok(RingElement { ring: self.clone(), parts })
    }

    pub fn multiply(self: &Arc<Self>, a: &RingElement<F>, b: &RingElement<F>) -> Result<RingElement<F>> {
        if !Arc::ptr_eq(&a.ring, self) || !Arc::ptr_eq(&b.ring, self) {
            return Err(Error::Invalid("elements of different rings".into()));
        }
        self.element(&a.to_free().mul(&b.to_free()))
    }

    /// Relations that fail to reduce to zero.
    pub fn relation_failures(self: &Arc<Self>) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (name, r) in &self.relations {
            if !self.element(r)?.is_zero() {
                out.push(name.clone());
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct RingElement<F> {
    ring: Arc<PresentedRing<F>>,
    /// Coordinates on the standard monomials, nonzero degrees only.
    parts: BTreeMap<usize, Vec<F>>,
}

impl<F: Field> PartialEq for RingElement<F> {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &o.ring) && self.parts == o.parts
    }
}

impl<F: Field> RingElement<F> {
    pub fn ring(&self) -> &Arc<PresentedRing<F>> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Coordinates in degree `m` (zeros when absent).
    pub fn coords(&self, m: usize) -> Vec<F> {
        self.parts.get(&m).cloned().unwrap_or_else(|| vec![F::zero(); self.ring.dimension(m)])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.parts.keys().copied().collect()
    }

    pub fn homogeneous_part(&self, m: usize) -> Self {
        let parts = self.parts.get(&m).map(|c| BTreeMap::from([(m, c.clone())])).unwrap_or_default();
        RingElement { ring: self.ring.clone(), parts }
    }

    pub fn to_free(&self) -> FreePoly<F> {
        let mut p = FreePoly::zero(self.ring.ngens());
        for (&m, coords) in &self.parts {
            let piece = &self.ring.pieces[m];
            for (&c, x) in piece.basis.iter().zip(coords) {
                p.add_term(piece.monomials[c].clone(), x.clone());
            }
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut parts = self.parts.clone();
        for (&m, c) in &o.parts {
            let e = parts.entry(m).or_insert_with(|| vec![F::zero(); c.len()]);
            for (x, y) in e.iter_mut().zip(c) {
                *x = x.clone() + y.clone();
            }
            if e.iter().all(|x| x.is_zero()) {
                parts.remove(&m);
            }
        }
        RingElement { ring: self.ring.clone(), parts }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return RingElement { ring: self.ring.clone(), parts: BTreeMap::new() };
        }
        let parts = self
            .parts
            .iter()
            .map(|(&m, c)| (m, c.iter().map(|x| x.clone() * s.clone()).collect()))
            .collect();
        RingElement { ring: self.ring.clone(), parts }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.ring.multiply(self, o)
    }

    pub fn to_text(&self) -> String {
        self.to_free().to_text(&self.ring.names)
    }
}

/// Rank of a list of homogeneous elements of one degree.
pub fn rank_in_degree<F: Field>(elems: &[RingElement<F>], m: usize) -> usize {
    let mut rows: Vec<Vec<F>> = elems.iter().map(|e| e.coords(m)).collect();
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    crate::linalg::rref(&mut rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::F2;
    use crate::polyalg::Q;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_weight(&[1, 2], 4).len(), 3);
        assert_eq!(monomials_of_weight(&[1, 1, 1], 2).len(), 6);
        assert_eq!(monomials_of_weight(&[2], 3).len(), 0);
        assert_eq!(monomials_of_weight(&[1, 2], 0), vec![vec![0, 0]]);
    }

    #[test]
    fn truncated_polynomial_ring() {
        // Q[x]/(x^3): dims 1,1,1,0
        let x3 = FreePoly::<Q>::var(1, 0).pow(3);
        let r = PresentedRing::build(
            names(&["x"]),
            vec![1],
            vec![("cube".into(), x3)],
            Grading::Finite { top: 2 },
            Some(&[1, 1, 1]),
        )
        .unwrap();
        assert_eq!(r.hilbert(), vec![1, 1, 1]);
        let x = r.generator("x").unwrap();
        let x2 = x.mul(&x).unwrap();
        assert_eq!(x2.to_text(), "x^2");
        assert!(x2.mul(&x).unwrap().is_zero());
        assert!(x2.mul(&x2).unwrap().is_zero());
        assert_eq!(r.one().mul(&x).unwrap(), x);
    }

    #[test]
    fn hilbert_mismatch_reported() {
        let r = PresentedRing::<Q>::build(names(&["x"]), vec![1], vec![], Grading::Finite { top: 1 }, None);
        assert!(matches!(r, Err(Error::Hilbert { degree: 2, .. })));
    }

    #[test]
    fn quadric_over_both_fields() {
        // x^2 - y^2 with x, y in degree 1: over F2 it is (x + y)^2
        let x = FreePoly::<Q>::var(2, 0);
        let y = FreePoly::<Q>::var(2, 1);
        let rel = x.mul(&x).sub(&y.mul(&y));
        let r = PresentedRing::build(names(&["x", "y"]), vec![1, 1], vec![("q".into(), rel)], Grading::Truncated { trunc: 4 }, Some(&[1, 2, 2, 2, 2]))
            .unwrap();
        let xe = r.generator("x").unwrap();
        let ye = r.generator("y").unwrap();
        assert_eq!(xe.mul(&xe).unwrap(), ye.mul(&ye).unwrap());
        assert!(matches!(
            r.element(&FreePoly::var(2, 0).pow(5)),
            Err(Error::Truncation { degree: 5, trunc: 4 })
        ));
        let x = FreePoly::<F2>::var(2, 0);
        let y = FreePoly::<F2>::var(2, 1);
        let s = x.add(&y);
        let r2 = PresentedRing::build(names(&["x", "y"]), vec![1, 1], vec![("q".into(), x.mul(&x).sub(&y.mul(&y)))], Grading::Truncated { trunc: 3 }, None)
            .unwrap();
        assert!(!r2.element(&s).unwrap().is_zero());
        assert!(r2.element(&s.mul(&s)).unwrap().is_zero());
        assert_eq!(r2.hilbert(), vec![1, 2, 2, 2]);
    }
}

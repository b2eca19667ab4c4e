//! Duan's matrix `A_w`, the operator `T_A`, and structure constants
//! `c^w_{u,v} = T_{A_w}((Σ_{s_L = u} x_L)(Σ_{s_K = v} x_K))`.
//!
//! The recursion for `T_A`: for `k = 1`, `T(c x_1) = c`; otherwise write
//! `h = Σ_r h_r x_k^r` and set `T_A(h) = Σ_{r≥1} T_{A'}(h_r L^{r-1})` with
//! `L = Σ_{p<k} a_{p,k} x_p` and `A'` the leading `(k-1)`-submatrix.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{RootDatum, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuanMatrix {
    /// `a[p][q] = -⟨α_{i_p}^∨, α_{i_q}⟩` for `p < q`, zero otherwise.
    pub a: Vec<Vec<i64>>,
}

impl DuanMatrix {
    pub fn size(&self) -> usize {
        self.a.len()
    }
}

pub fn duan_matrix(d: &RootDatum, word: &[usize]) -> Result<DuanMatrix> {
    let w = d.element_from_word(word)?;
    if w.length != word.len() {
        return Err(Error::NotReduced(word.to_vec()));
    }
    let k = word.len();
    let mut a = vec![vec![0i64; k]; k];
    for p in 0..k {
        for q in p + 1..k {
            // cartan[i][j] = ⟨α_i^∨, α_j⟩; this orientation agrees with the
            // divided-difference oracle in the non-simply-laced types
            a[p][q] = -d.cartan[word[p] - 1][word[q] - 1];
        }
    }
    Ok(DuanMatrix { a })
}

/// Integer polynomial in `x_1..x_k`, exponents as small vectors.
pub type IntPoly = HashMap<Vec<u8>, BigInt>;

fn add_into(acc: &mut IntPoly, e: Vec<u8>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(e).or_insert_with(BigInt::zero);
    *entry += c;
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `T_A(h)` for `h` homogeneous of degree `size(A)` in `size(A)` variables.
pub fn duan_operator(a: &DuanMatrix, h: &IntPoly) -> Result<BigInt> {
    let k = a.size();
    for e in h.keys() {
        let deg: usize = e.iter().map(|&x| x as usize).sum();
        if e.len() != k || deg != k {
            return Err(Error::DegreeMismatch { expected: k as i64, got: format!("{e:?}") });
        }
    }
    Ok(t_rec(&a.a, k, h.clone()))
}

fn t_rec(a: &[Vec<i64>], k: usize, h: IntPoly) -> BigInt {
    if h.is_empty() {
        return BigInt::zero();
    }
    if k == 0 {
        return h.get(&Vec::new()).cloned().unwrap_or_else(BigInt::zero);
    }
    if k == 1 {
        return h.values().fold(BigInt::zero(), |s, c| s + c);
    }
    let last = k - 1;
    // L = Σ_{p<k} a_{p,k} x_p, as a polynomial in k-1 variables
    let mut lin = IntPoly::new();
    for p in 0..last {
        if a[p][last] != 0 {
            let mut e = vec![0u8; last];
            e[p] = 1;
            lin.insert(e, BigInt::from(a[p][last]));
        }
    }
    let mut by_r: HashMap<u8, IntPoly> = HashMap::new();
    for (e, c) in h {
        let r = e[last];
        if r == 0 {
            continue;
        }
        by_r.entry(r).or_default().insert(e[..last].to_vec(), c);
    }
    let mut next = IntPoly::new();
    let mut rs: Vec<u8> = by_r.keys().copied().collect();
    rs.sort();
    let mut lpow: IntPoly = IntPoly::from([(vec![0u8; last], BigInt::one())]);
    let mut cur = 1u8;
    for r in rs {
        while cur < r {
            lpow = mul(&lpow, &lin);
            cur += 1;
        }
        for (e, c) in mul(&by_r[&r], &lpow) {
            add_into(&mut next, e, c);
        }
    }
    next.retain(|_, c| !c.is_zero());
    t_rec(a, last, next)
}

/// `Σ_L x_L` over position sets `L` of the word with `s_L = u` (ordered
/// product of the chosen letters).
pub fn subword_sum(d: &RootDatum, word: &[usize], u: &WeylElement) -> IntPoly {
    let k = word.len();
    let target = u.inverse(d).apply(&d.rho());
    let m = u.length;
    let mut out = IntPoly::new();
    let mut chosen = Vec::with_capacity(m);
    // y tracks x^{-1}ρ for the chosen prefix product x
    fn go(
        d: &RootDatum,
        word: &[usize],
        pos: usize,
        m: usize,
        y: Vec<i64>,
        chosen: &mut Vec<usize>,
        target: &[i64],
        out: &mut IntPoly,
    ) {
        if chosen.len() == m {
            if y == target {
                let mut e = vec![0u8; word.len()];
                for &p in chosen.iter() {
                    e[p] = 1;
                }
                out.insert(e, BigInt::one());
            }
            return;
        }
        if word.len() - pos < m - chosen.len() {
            return;
        }
        let i = word[pos] - 1;
        // x s_i stays reduced iff (x^{-1}ρ)_i > 0
        if y[i] > 0 {
            chosen.push(pos);
            go(d, word, pos + 1, m, d.reflect0(i, &y), chosen, target, out);
            chosen.pop();
        }
        go(d, word, pos + 1, m, y, chosen, target, out);
    }
    go(d, word, 0, m, d.rho(), &mut chosen, &target, &mut out);
    let _ = k;
    out
}

/// `c^w_{u,v}`; a length mismatch is reported as an error rather than zero.
pub fn structure_constant(
    d: &RootDatum,
    u: &WeylElement,
    v: &WeylElement,
    w: &WeylElement,
) -> Result<BigInt> {
    if w.length != u.length + v.length {
        return Err(Error::LengthMismatch { lw: w.length, luv: u.length + v.length });
    }
    structure_constant_word(d, u, v, &w.word)
}

/// Same as [`structure_constant`] with an explicit reduced word for `w`.
pub fn structure_constant_word(
    d: &RootDatum,
    u: &WeylElement,
    v: &WeylElement,
    word: &[usize],
) -> Result<BigInt> {
    let a = duan_matrix(d, word)?;
    if word.len() != u.length + v.length {
        return Err(Error::LengthMismatch { lw: word.len(), luv: u.length + v.length });
    }
    let su = subword_sum(d, word, u);
    if su.is_empty() {
        return Ok(BigInt::zero());
    }
    let sv = if u == v { su.clone() } else { subword_sum(d, word, v) };
    if sv.is_empty() {
        return Ok(BigInt::zero());
    }
    let c = duan_operator(&a, &mul(&su, &sv))?;
    if c.is_negative() {
        return Err(Error::Invalid(format!(
            "negative structure constant {c} for w={word:?}, u={:?}, v={:?}",
            u.word, v.word
        )));
    }
    Ok(c)
}

/// A second reduced word of `w`, different from the canonical one, found by
/// taking the largest left descent at every step.
pub fn alternate_word(d: &RootDatum, w: &WeylElement) -> Option<Vec<usize>> {
    let mut u = w.apply(&d.rho());
    let mut word = Vec::new();
    while let Some(i) = u.iter().rposition(|&x| x < 0) {
        word.push(i + 1);
        u = d.reflect0(i, &u);
    }
    (word != w.word).then_some(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(&[u8], i64)]) -> IntPoly {
        terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))).collect()
    }

    #[test]
    fn matrices() {
        let a2 = RootDatum::from_label("A2").unwrap();
        assert_eq!(duan_matrix(&a2, &[1, 2]).unwrap().a, vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(duan_matrix(&a2, &[2]).unwrap().a, vec![vec![0]]);
        assert!(duan_matrix(&a2, &[1, 1]).is_err());
        let g2 = RootDatum::from_label("G2").unwrap();
        // α1 is short: <α1^∨, α2> = -3, <α2^∨, α1> = -1
        assert_eq!(duan_matrix(&g2, &[1, 2]).unwrap().a[0][1], 3);
        assert_eq!(duan_matrix(&g2, &[2, 1]).unwrap().a[0][1], 1);
    }

    #[test]
    fn operator_small() {
        let one = DuanMatrix { a: vec![vec![0]] };
        assert_eq!(duan_operator(&one, &poly(&[(&[1], 5)])).unwrap(), BigInt::from(5));
        let a = DuanMatrix { a: vec![vec![0, 1], vec![0, 0]] };
        assert_eq!(duan_operator(&a, &poly(&[(&[1, 1], 1)])).unwrap(), BigInt::from(1));
        assert_eq!(duan_operator(&a, &poly(&[(&[2, 0], 1)])).unwrap(), BigInt::from(0));
        assert_eq!(duan_operator(&a, &poly(&[(&[0, 2], 1)])).unwrap(), BigInt::from(1));
        assert!(duan_operator(&a, &poly(&[(&[1, 0], 1)])).is_err());
        let empty = DuanMatrix { a: vec![] };
        assert_eq!(duan_operator(&empty, &poly(&[(&[], 2)])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn a2_constants() {
        let d = RootDatum::from_label("A2").unwrap();
        let e = |w: &[usize]| d.element_from_word(w).unwrap();
        let c = |u: &[usize], v: &[usize], w: &[usize]| structure_constant(&d, &e(u), &e(v), &e(w)).unwrap();
        assert_eq!(c(&[1], &[1], &[2, 1]), BigInt::from(1));
        assert_eq!(c(&[1], &[1], &[1, 2]), BigInt::from(0));
        assert_eq!(c(&[2], &[1], &[1, 2]), BigInt::from(1));
        assert_eq!(c(&[], &[1, 2], &[1, 2]), BigInt::from(1));
        assert!(matches!(
            structure_constant(&d, &e(&[1]), &e(&[]), &e(&[1, 2])),
            Err(Error::LengthMismatch { .. })
        ));
    }
}

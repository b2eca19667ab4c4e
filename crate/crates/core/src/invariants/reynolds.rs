//! Independent counts of Levi invariants, used to confirm that a generator
//! family spans the invariant ring in low degrees.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyalg::{Poly, Q};
use crate::rootsys::RootDatum;

/// Levi Weyl groups larger than this are not averaged over.
pub const REYNOLDS_MAX_ORDER: u128 = 2000;

/// `dim S^m(𝔱*)^{W_L}` for `m = 0..=max_deg`, from the Levi degrees
/// (`Π 1/(1 - t^{d_i})`).
pub fn hilbert_dimensions(d: &RootDatum, levi: &[usize], max_deg: usize) -> Vec<u64> {
    let mut h = vec![0u64; max_deg + 1];
    h[0] = 1;
    for deg in d.levi_degrees(levi) {
        for m in deg..=max_deg {
            h[m] += h[m - deg];
        }
    }
    h
}

/// All exponent vectors of total degree `m` in `n` variables.
pub fn monomials(n: usize, m: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(m as u32);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=m).rev() {
            cur.push(k as u32);
            go(n, m - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if m == 0 {
            out.push(vec![]);
        }
        return out;
    }
    go(n, m, &mut Vec::new(), &mut out);
    out
}

/// Rank of a family of homogeneous polynomials of degree `m`.
pub fn span_rank(polys: &[Poly], n: usize, m: usize) -> usize {
    let mons = monomials(n, m);
    let idx: std::collections::HashMap<Vec<u32>, usize> =
        mons.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| {
            let mut r = vec![Q::zero(); mons.len()];
            for (e, c) in p.terms() {
                if let Some(&i) = idx.get(e) {
                    r[i] = c.clone();
                }
            }
            r
        })
        .collect();
    linalg::rank(&rows)
}

/// `dim S^m(𝔱*)^{W_L}` by averaging every monomial over `W_L`.
pub fn reynolds_dimension(d: &RootDatum, levi: &[usize], m: usize) -> Result<usize> {
    if d.levi_weyl_order(levi) > REYNOLDS_MAX_ORDER {
        return Err(Error::CostGuard(format!(
            "Levi Weyl group of order {} is too large to average over",
            d.levi_weyl_order(levi)
        )));
    }
    let n = d.rank();
    let sp = super::omega_space(n);
    let group = d.levi_elements(levi);
    let mut averaged = Vec::new();
    for e in monomials(n, m) {
        let mono = Poly::monomial(&sp, e, Q::from_integer(1.into()));
        let mut s = Poly::zero(&sp);
        for w in &group {
            s = &s + &super::act_poly(d, w, &mono)?;
        }
        averaged.push(s);
    }
    Ok(span_rank(&averaged, n, m))
}

/// Products of generators with total degree `m`; generators are given with
/// their (homogeneous) degree.
pub fn products_of_degree(gens: &[(Poly, usize)], m: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    fn go(gens: &[(Poly, usize)], start: usize, left: usize, acc: Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..gens.len() {
            let (g, dg) = &gens[i];
            if *dg == 0 || *dg > left {
                continue;
            }
            go(gens, i, left - dg, &acc * g, out);
        }
    }
    if let Some((g, _)) = gens.first() {
        go(gens, 0, m, Poly::one(g.space()), &mut out);
    }
    out
}

/// Per degree up to `max_deg`: (rank of generator products, Hilbert count).
pub fn span_report(
    d: &RootDatum,
    levi: &[usize],
    gens: &[(Poly, usize)],
    max_deg: usize,
) -> Vec<(usize, usize, u64)> {
    let h = hilbert_dimensions(d, levi, max_deg);
    (1..=max_deg)
        .map(|m| {
            let prods = products_of_degree(gens, m);
            (m, span_rank(&prods, d.rank(), m), h[m])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
    }

    #[test]
    fn hilbert_matches_reynolds_small() {
        let g2 = RootDatum::from_label("G2").unwrap();
        let f4 = RootDatum::from_label("F4").unwrap();
        for (d, levi) in [(&g2, vec![2]), (&g2, vec![1]), (&f4, vec![2, 3, 4]), (&f4, vec![1, 2, 4])] {
            let h = hilbert_dimensions(d, &levi, 4);
            for m in 0..=4 {
                assert_eq!(reynolds_dimension(d, &levi, m).unwrap() as u64, h[m], "{levi:?} m={m}");
            }
        }
    }
}

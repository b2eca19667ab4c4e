//! Levi invariants of `P_{n-k} ⊂ SO(2n)` in the diagonal coordinates
//! `t̄_1..t̄_n`, where `W(D_n)` acts by signed permutations with an even
//! number of sign changes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyalg::{elementary_symmetric, q, Poly, VarSpace};
use crate::rootsys::dn_signed_reflection;
use crate::springer::dn_delta_omega;

#[derive(Clone, Debug)]
pub struct DnLeviGenerators {
    pub n: usize,
    pub k: usize,
    /// `e_i(t̄_1..t̄_{n-k})` for the `GL(n-k)` factor.
    pub gl: Vec<(String, Poly)>,
    /// `e_i(t̄²_{n-k+1..n})`, `1 ≤ i ≤ k`.
    pub squares: Vec<(String, Poly)>,
    /// `t̄_{n-k+1}⋯t̄_n`.
    pub odd: (String, Poly),
}

pub fn tbar_space(n: usize) -> VarSpace {
    VarSpace::indexed("tb", n)
}

pub fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 4 || k < 2 || k > n - 1 {
        return Err(Error::Invalid(format!("need n >= 4 and 2 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

pub fn dn_levi_generators(n: usize, k: usize) -> Result<DnLeviGenerators> {
    check_nk(n, k)?;
    let sp = tbar_space(n);
    let t = |i: usize| Poly::var(&sp, i - 1);
    let first: Vec<Poly> = (1..=n - k).map(t).collect();
    let last: Vec<Poly> = (n - k + 1..=n).map(t).collect();
    let sq: Vec<Poly> = last.iter().map(|x| x * x).collect();
    let names = |v: &[usize], square: bool| {
        v.iter()
            .map(|i| if square { format!("tb{i}^2") } else { format!("tb{i}") })
            .collect::<Vec<_>>()
            .join(",")
    };
    let lo: Vec<usize> = (1..=n - k).collect();
    let hi: Vec<usize> = (n - k + 1..=n).collect();
    let gl = (1..=n - k)
        .map(|i| Ok((format!("e{i}({})", names(&lo, false)), elementary_symmetric(i, &first, &sp)?)))
        .collect::<Result<Vec<_>>>()?;
    let squares = (1..=k)
        .map(|i| Ok((format!("e{i}({})", names(&hi, true)), elementary_symmetric(i, &sq, &sp)?)))
        .collect::<Result<Vec<_>>>()?;
    let odd_poly = last.iter().fold(Poly::one(&sp), |a, b| &a * b);
    let odd = (hi.iter().map(|i| format!("tb{i}")).collect::<Vec<_>>().join("*"), odd_poly);
    Ok(DnLeviGenerators { n, k, gl, squares, odd })
}

impl DnLeviGenerators {
    pub fn all(&self) -> Vec<&(String, Poly)> {
        self.gl.iter().chain(self.squares.iter()).chain(std::iter::once(&self.odd)).collect()
    }

    /// The Levi simple reflections: every node except `n-k`.
    pub fn levi(&self) -> Vec<usize> {
        (1..=self.n).filter(|&j| j != self.n - self.k).collect()
    }
}

/// `s_i` of `D_n` acting on a polynomial in `t̄`.
pub fn dn_reflect_tbar(n: usize, i: usize, p: &Poly) -> Result<Poly> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let sp = p.space().clone();
    let perm = dn_signed_reflection(n, i);
    let assignment: BTreeMap<String, Poly> = (0..n)
        .map(|c| {
            let (t, s) = perm[c];
            (sp.name(c).to_string(), Poly::var(&sp, t).scale(&q(s)))
        })
        .collect();
    p.substitute(&assignment, &sp)
}

/// First Levi reflection of `P_{n-k}` moving `p` (signed-permutation model).
pub fn dn_invariance_witness(n: usize, k: usize, p: &Poly) -> Result<Option<usize>> {
    check_nk(n, k)?;
    for j in (1..=n).filter(|&j| j != n - k) {
        if dn_reflect_tbar(n, j, p)? != *p {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Rewrites a polynomial in `t̄` in the ω-variables through `t̄_i = δ_i`.
pub fn tbar_to_omega(n: usize, p: &Poly) -> Result<Poly> {
    let w = super::omega_space(n);
    let deltas = dn_delta_omega(n);
    let images: Vec<Poly> = deltas
        .iter()
        .map(|c| crate::polyalg::linear_form(&w, &c.iter().map(|&x| q(x)).collect::<Vec<_>>()))
        .collect();
    p.compose(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::invariance_witness;
    use crate::rootsys::RootDatum;

    #[test]
    fn d4_k2() {
        let g = dn_levi_generators(4, 2).unwrap();
        assert_eq!(g.squares.len(), 2);
        assert_eq!(g.odd.0, "tb3*tb4");
        let sp = tbar_space(4);
        assert_eq!(g.squares[1].1, Poly::parse("tb3^2*tb4^2", &sp).unwrap());
        let d = RootDatum::from_label("D4").unwrap();
        for (name, p) in g.all() {
            assert_eq!(dn_invariance_witness(4, 2, p).unwrap(), None, "{name}");
            let w = tbar_to_omega(4, p).unwrap();
            assert_eq!(invariance_witness(&d, &g.levi(), &w), None, "{name}");
        }
        // s4 sends tb3 -> -tb4, tb4 -> -tb3, fixing the product
        assert_eq!(dn_reflect_tbar(4, 4, &g.odd.1).unwrap(), g.odd.1);
        assert!(dn_levi_generators(3, 2).is_err());
        assert!(dn_levi_generators(5, 5).is_err());
    }

    #[test]
    fn signed_model_matches_root_datum() {
        let d = RootDatum::from_label("D5").unwrap();
        let sp = tbar_space(5);
        let p = Poly::parse("tb1^2*tb4 - 3*tb2*tb5 + tb3", &sp).unwrap();
        for i in 1..=5 {
            let a = tbar_to_omega(5, &dn_reflect_tbar(5, i, &p).unwrap()).unwrap();
            let b = crate::invariants::reflect_poly(&d, i, &tbar_to_omega(5, &p).unwrap()).unwrap();
            assert_eq!(a, b, "s{i}");
        }
    }
}

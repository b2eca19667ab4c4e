//! Levi-invariant polynomials: the reflection action on `S(𝔱*)`, the
//! tabulated generator families, the `D_n` constructions and the `E_6`
//! invariants `ψ_m` seen inside `E_7`.

pub mod dn;
pub mod library;
pub mod reynolds;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyalg::{q, Poly, VarSpace, Q};
use crate::rootsys::{RootDatum, WeylElement};

pub use dn::{dn_levi_generators, DnLeviGenerators};
pub use library::{case_generators, CaseLibrary, GeneratorFamily};

/// Variables `w1..wn` standing for the fundamental weights.
pub fn omega_space(rank: usize) -> VarSpace {
    VarSpace::indexed("w", rank)
}

/// `s_j · p` for the 1-based simple reflection `s_j`, with `p` a polynomial
/// in the ω-variables: `ω_j ↦ ω_j - α_j`, the other ω fixed.
pub fn reflect_poly(d: &RootDatum, j: usize, p: &Poly) -> Result<Poly> {
    d.check_index(j)?;
    let space = p.space().clone();
    let n = d.rank();
    if space.len() != n {
        return Err(Error::Invalid(format!("{} variables for rank {n}", space.len())));
    }
    let alpha = d.simple_root_omega(j - 1);
    let mut image = Poly::var(&space, j - 1);
    for (k, &a) in alpha.iter().enumerate() {
        if a != 0 {
            image = &image - &Poly::var(&space, k).scale(&q(a));
        }
    }
    let assignment = BTreeMap::from([(space.name(j - 1).to_string(), image)]);
    let mut full = assignment;
    for k in 0..n {
        if k != j - 1 {
            full.insert(space.name(k).to_string(), Poly::var(&space, k));
        }
    }
    p.substitute(&full, &space)
}

/// `w · p`: `ω_k ↦ w(ω_k)`.
pub fn act_poly(d: &RootDatum, w: &WeylElement, p: &Poly) -> Result<Poly> {
    let space = p.space().clone();
    let n = d.rank();
    let images: Vec<Poly> = (0..n)
        .map(|k| {
            let mut img = Poly::zero(&space);
            for r in 0..n {
                let c = w.action[r * n + k];
                if c != 0 {
                    img = &img + &Poly::var(&space, r).scale(&q(c));
                }
            }
            img
        })
        .collect();
    p.compose(&images)
}

/// First Levi node whose reflection moves `p`.
pub fn invariance_witness(d: &RootDatum, levi: &[usize], p: &Poly) -> Option<usize> {
    levi.iter().copied().find(|&j| match reflect_poly(d, j, p) {
        Ok(r) => r != *p,
        Err(_) => true,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Invariance {
    Pass,
    Fail { j: usize, difference: Poly },
}

impl Invariance {
    pub fn passed(&self) -> bool {
        matches!(self, Invariance::Pass)
    }
}

/// Invariance under the Levi of the maximal parabolic `P_r`.
pub fn check_invariance(d: &RootDatum, r: usize, p: &Poly) -> Result<Invariance> {
    d.check_index(r)?;
    for j in (1..=d.rank()).filter(|&j| j != r) {
        let img = reflect_poly(d, j, p)?;
        if img != *p {
            return Ok(Invariance::Fail { j, difference: &img - p });
        }
    }
    Ok(Invariance::Pass)
}

/// The degrees for which `ψ_m` is tabulated.
pub const PSI_DEGREES: [u32; 6] = [2, 5, 6, 8, 9, 12];

/// The 27 linear forms `a_i, b_i, c_ij` in α-coordinates of `E_7`
/// (`α_7` never occurs).
pub fn e6_psi_summands() -> Vec<Vec<i64>> {
    let xs: [[i64; 7]; 6] = [
        [5, 0, 4, 3, 2, 1, 0],
        [-1, 0, 4, 3, 2, 1, 0],
        [-1, 0, -2, 3, 2, 1, 0],
        [-1, 0, -2, -3, 2, 1, 0],
        [-1, 0, -2, -3, -4, 1, 0],
        [-1, 0, -2, -3, -4, -5, 0],
    ];
    let x: [i64; 7] = [-3, -6, -6, -9, -6, -3, 0];
    let mut out = Vec::with_capacity(27);
    for xi in &xs {
        out.push((0..7).map(|k| xi[k] + x[k]).collect());
    }
    for xi in &xs {
        out.push((0..7).map(|k| xi[k] - x[k]).collect());
    }
    for i in 0..6 {
        for j in i + 1..6 {
            out.push((0..7).map(|k| -xs[i][k] - xs[j][k]).collect());
        }
    }
    out
}

/// `ψ_m = Σ a_i^m + Σ b_i^m + Σ c_ij^m` as a polynomial in the ω-variables
/// of `E_7`.
pub fn e6_psi(m: u32) -> Result<Poly> {
    if !PSI_DEGREES.contains(&m) {
        return Err(Error::Invalid(format!("psi_{m} is not tabulated")));
    }
    let d = RootDatum::from_label("E7")?;
    let space = omega_space(7);
    let mut out = Poly::zero(&space);
    for form in e6_psi_summands() {
        let om = d.alpha_to_omega(&form);
        let lin = crate::polyalg::linear_form(&space, &om.iter().map(|&c| q(c)).collect::<Vec<Q>>());
        out = &out + &lin.pow(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_invariance_examples() {
        let d = RootDatum::from_label("G2").unwrap();
        let sp = omega_space(2);
        // x1 = w1, x2 = w2 - w1; (x2 - x1/2)^2
        let f = Poly::parse("w2^2 - 3*w1*w2 + 9/4*w1^2", &sp).unwrap();
        assert_eq!(check_invariance(&d, 1, &f).unwrap(), Invariance::Pass);
        let x2 = Poly::parse("w2 - w1", &sp).unwrap();
        match check_invariance(&d, 1, &x2).unwrap() {
            Invariance::Fail { j, difference } => {
                assert_eq!(j, 2);
                assert!(!difference.is_zero());
            }
            Invariance::Pass => panic!("x2 is not s2-invariant"),
        }
    }

    #[test]
    fn reflection_is_involution() {
        let d = RootDatum::from_label("F4").unwrap();
        let sp = omega_space(4);
        let p = Poly::parse("w1^2*w3 - 2*w2*w4 + w4^3", &sp).unwrap();
        for j in 1..=4 {
            let r = reflect_poly(&d, j, &reflect_poly(&d, j, &p).unwrap()).unwrap();
            assert_eq!(r, p);
        }
    }

    #[test]
    fn psi_summands() {
        assert_eq!(e6_psi_summands().len(), 27);
        assert!(e6_psi(3).is_err());
        let d = RootDatum::from_label("E7").unwrap();
        let p2 = e6_psi(2).unwrap();
        assert_eq!(p2.homogeneous_degree(), Some(2));
        assert_eq!(check_invariance(&d, 7, &p2).unwrap(), Invariance::Pass);
        assert!(!check_invariance(&d, 6, &p2).unwrap().passed());
    }
}

//! Chern classes of the quotient bundle on `OG(n-k, 2n)` and the identity
//! `ξ(e_i(t̄²_{n-k+1..n})) = c_i² + 2 Σ_j (-1)^j c_{i+j} c_{i-j}`.

use crate::error::{Error, Result};
use crate::invariants::dn::{check_nk, dn_levi_generators, tbar_to_omega};
use crate::polyalg::{linear_form, q, Poly};
use crate::rootsys::Family;
use crate::schubert::{Calculus, Engine, SchubertClass, Space, SupportMode};
use crate::springer::dn_delta_omega;

fn dn_rank(calc: &Calculus) -> Result<usize> {
    let t = calc.group();
    if t.family != Family::D {
        return Err(Error::InvalidType(format!("{t} is not of type D")));
    }
    Ok(t.rank)
}

/// `h_p(δ_1..δ_m)` in the ω-variables for `p = 0..=top`.
fn complete_homogeneous(calc: &Calculus, m: usize, top: usize) -> Vec<Poly> {
    let sp = calc.omega_space();
    let deltas = dn_delta_omega(calc.datum.rank());
    let mut h: Vec<Poly> = vec![Poly::zero(&sp); top + 1];
    h[0] = Poly::one(&sp);
    for d in deltas.iter().take(m) {
        let x = linear_form(&sp, &d.iter().map(|&c| q(c)).collect::<Vec<_>>());
        // multiply by 1/(1-x): h'_p = Σ_{a ≤ p} x^a h_{p-a}
        for p in (1..=top).rev() {
            let mut acc = h[p].clone();
            let mut xa = Poly::one(&sp);
            for a in 1..=p {
                xa = &xa * &x;
                acc = &acc + &(&xa * &h[p - a]);
            }
            h[p] = acc;
        }
    }
    h
}

/// `c_0..c_{n+k}` of the quotient bundle `Q = V_D / S` on `OG(n-k, 2n)`,
/// with `c(Q) = 1 / Π_{p ≤ n-k}(1 - x_p)` and `x_p = β(δ_p)`.
pub fn chern_quotient_d(calc: &Calculus, k: usize) -> Result<Vec<SchubertClass>> {
    let n = dn_rank(calc)?;
    check_nk(n, k)?;
    let space = Space::maximal(n - k);
    complete_homogeneous(calc, n - k, n + k)
        .iter()
        .map(|h| calc.borel_image(h, &space, SupportMode::Auto))
        .collect()
}

#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub i: usize,
    pub lhs: SchubertClass,
    pub rhs: SchubertClass,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of the identity for `e_i`; `i = 0` is `1 = c_0²`.
pub fn verify_theorem_xi_d(calc: &Calculus, k: usize, i: usize, chern: &[SchubertClass]) -> Result<TheoremCheck> {
    let n = dn_rank(calc)?;
    check_nk(n, k)?;
    if i > k {
        return Err(Error::Invalid(format!("need i <= k, got i={i}, k={k}")));
    }
    let space = Space::maximal(n - k);
    let lhs = if i == 0 {
        calc.borel_image(&Poly::one(&calc.omega_space()), &space, SupportMode::Auto)?
    } else {
        let g = dn_levi_generators(n, k)?;
        let e = tbar_to_omega(n, &g.squares[i - 1].1)?;
        calc.borel_image(&e, &space, SupportMode::Auto)?
    };
    let c = |p: usize| chern.get(p);
    let mut rhs = match c(i) {
        Some(ci) => calc.cup_product(ci, ci, Engine::Duan)?,
        None => SchubertClass::zero(calc.group(), space.clone()),
    };
    for j in 1..=i {
        if let (Some(a), Some(b)) = (c(i + j), c(i - j)) {
            let sign = if j % 2 == 0 { q(2) } else { q(-2) };
            rhs = rhs.add(&calc.cup_product(a, b, Engine::Duan)?.scale(&sign))?;
        }
    }
    Ok(TheoremCheck { i, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_k2() {
        let calc = Calculus::from_label("D4").unwrap();
        let c = chern_quotient_d(&calc, 2).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c[0].to_text(), "e[e]");
        assert_eq!(c[1].to_text(), "e[s2]");
        for i in 0..=2 {
            assert!(verify_theorem_xi_d(&calc, 2, i, &c).unwrap().passed(), "i={i}");
        }
    }
}
